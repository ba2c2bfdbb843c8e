# t-clique spectral radius and extremal graph scans
__version__ = "1.0.0"
