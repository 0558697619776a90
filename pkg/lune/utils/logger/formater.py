import os
import logging

# Colored console formatter, the file handler keeps the plain format
class LoggingFormatter(logging.Formatter):
    # Colors
    black = "\x1b[30m"
    red = "\x1b[31m"
    green = "\x1b[32m"
    yellow = "\x1b[33m"
    gray = "\x1b[38m"
    # Styles
    reset = "\x1b[0m"
    bold = "\x1b[1m"

    COLORS = {
        logging.DEBUG: gray + bold,
        logging.INFO: green,
        logging.WARNING: yellow + bold,
        logging.ERROR: red,
        logging.CRITICAL: red + bold,
    }

    DATE_FORMAT = "%m-%d-%Y %I:%M:%S %p"
    PLAIN_FORMAT = "[{asctime}] [{levelname}] {name}: {message}"

    def __init__(self, use_color: bool = True) -> None:
        super().__init__(self.PLAIN_FORMAT, self.DATE_FORMAT, style="{")
        self.use_color = use_color

    def format(self, record):
        if not self.use_color:
            return super().format(record)

        log_color = self.COLORS.get(record.levelno, self.reset)
        format = "(black){asctime}(reset) (levelcolor){levelname:<8}(reset) (name){name}(reset) {message}"
        format = format.replace("(black)", self.black + self.bold)
        format = format.replace("(reset)", self.reset)
        format = format.replace("(levelcolor)", log_color)
        format = format.replace("(name)", self.bold)
        formatter = logging.Formatter(format, self.DATE_FORMAT, style="{")
        return formatter.format(record)


# This function is used to attach the console and file handlers to the application logger
def setup_logging(log_file: str | None, level: int = logging.INFO, use_color: bool = True) -> logging.Logger:
    logger = logging.getLogger("lune")
    logger.setLevel(level)
    logger.handlers.clear()

    # Console handler
    console_handler = logging.StreamHandler()
    console_handler.setFormatter(LoggingFormatter(use_color=use_color))
    logger.addHandler(console_handler)

    # File handler
    if log_file:
        os.makedirs(os.path.dirname(os.path.abspath(log_file)), exist_ok=True)
        file_handler = logging.FileHandler(filename=log_file, encoding="utf-8", mode="w")
        file_handler.setFormatter(LoggingFormatter(use_color=False))
        logger.addHandler(file_handler)

    return logger
