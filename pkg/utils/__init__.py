from . import constants
from . import enums
from . import errors
from . import misc
from . import reports
