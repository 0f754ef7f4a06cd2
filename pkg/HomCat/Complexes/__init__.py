from .bimComplex import *
from .crossingComplex import *
