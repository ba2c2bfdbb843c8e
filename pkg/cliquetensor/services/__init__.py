# Services package

# Graph, clique, spectral, packing, scan and verification logic
