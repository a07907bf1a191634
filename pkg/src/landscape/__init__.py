"""Cluster structure of viable genotypes under pairwise incompatibilities."""

__version__ = "1.0.0"
__author__ = "Rafli"
__email__ = "hidayattul.rafli@gmail.com"
__url__ = "https://github.com/hdytrfli/landscape"
__description__ = (
    "Exact cluster counts for 2-SAT viable-genotype landscapes on the n-cube, "
    "with Monte Carlo checks of the Poisson law for the number of clusters."
)
