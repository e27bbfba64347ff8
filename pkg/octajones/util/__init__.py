from .color_log import ColorFormatter
from .parallel import gather_in_pool
