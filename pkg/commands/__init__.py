from .algebra_commands import EXPRESSION_COMMANDS
from .config_commands import config_group
from .verify_commands import verify
