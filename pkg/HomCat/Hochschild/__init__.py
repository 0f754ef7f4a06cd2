from .koszul import *
from .hhhComputation import *
