from .poincare_report import *
from .visual_report import *
