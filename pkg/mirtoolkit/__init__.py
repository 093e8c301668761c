from . import configs
from . import exactalg
from . import matrixkit
from . import liecore
from . import orbitclass
from . import utils
from . import fforacle
from . import catalog
from . import fileio
from . import cli
