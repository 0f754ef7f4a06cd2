from .util import *
from .core import *
from .Algebra import *
from .LinearAlgebra import *
from .Webs import *
from .Presentations import *
from .Complexes import *
from .Hochschild import *
from .Bracket import *
from .Oracle import *
from .ReportGeneration.poincare_report import *
from .ReportGeneration.visual_report import *
