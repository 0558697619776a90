from .formater import LoggingFormatter, setup_logging
