# Test suite for cliquetensor
