# Models package

# Plain domain classes
