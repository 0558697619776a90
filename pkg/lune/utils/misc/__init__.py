from .app_misc import (
    CONFIG_FILE,
    COMMAND_FOLDER,
    dumps,
    enabled_commands,
    load_config,
    parse_numbers,
    parse_vector,
    read_tolerance_file,
    resolve_seed,
    resolve_tolerance,
    rounded,
)
