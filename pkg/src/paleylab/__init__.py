"""paleylab: spectral pseudorandomness experiments on Paley graphs."""

__version__ = "0.1.0"

from .errors import ConvergenceError, GuardError, NumericallyInvalid
from .field import (
    PrimeField,
    char_eval,
    char_table,
    gauss_angle,
    gauss_sum,
    jacobi_sum,
    jacobi_via_gauss,
    kloosterman,
    make_field,
    weil_sum,
)
from .paley import (
    IndependentSet,
    InducedGraph,
    build_paley,
    degree_extremes,
    edge_list_text,
    enumerate_localizations,
    exact_clique_number,
    exact_independence_number,
    independent_set,
    localize,
    localized_nonresidues,
    quartic_subgraph,
    sample_random_subgraph,
)
from .laws import Esd, KestenMcKay, Manova, km_cdf, km_density, kolmogorov_distance, manova_edges
from .spectra import (
    Spectrum,
    circulant_spectrum_localized,
    circulant_spectrum_paley,
    dense_spectrum,
    esd_scaled,
    quartic_spectrum,
    trace_moments,
)
from .necklace import (
    NecklaceSpec,
    degree1_jacobi_moment,
    degree1_kloosterman_moment,
    degree2_special,
    gauss_reduction_eval,
    necklace_bruteforce,
    necklace_scan,
    necklace_trace,
    restricted_necklace,
)
from .bounds import BoundReport, haemers_bound, hanson_petridis_bound, km_edge_bound, localization_bound
from .theta import ThetaResult, theta_circulant_lp, theta_localization2_bound, theta_paley, theta_sdp
