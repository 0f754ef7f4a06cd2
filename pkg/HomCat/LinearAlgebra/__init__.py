from .qmat import *
from .subquotient import *
