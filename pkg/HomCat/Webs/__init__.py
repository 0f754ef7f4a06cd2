from .ladderWeb import *
from .colouredBraid import *
from .resolutions import *
