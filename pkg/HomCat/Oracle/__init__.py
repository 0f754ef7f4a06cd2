from .denseOracle import *
from .verificationCheck import *
from .squareLemmas import *
from .hochschildOracles import *
from .moyAxioms import *
from .braidChecks import *
