from .moyBracket import *
