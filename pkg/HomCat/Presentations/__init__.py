from .ringPres import *
from .sliceBasis import *
from .mapDesc import *
from .zips import *
