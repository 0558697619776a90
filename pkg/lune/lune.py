import os
import sys
import logging
import argparse
import platform
import importlib
from dotenv import load_dotenv
from utils.errors import LuneError
from utils.logger import setup_logging
from utils.measure import SampleCounts
from utils.misc import CONFIG_FILE, enabled_commands, load_config, resolve_tolerance
from utils.sphere import DEFAULT_TOLERANCE

"""
lune
    Command line of the spherical convex body toolkit. Every module in commands/ that is
    not listed in "disabled_commands" of config.json is loaded and registers one subcommand.
"""

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_IO = 3


class LuneApp:
    def __init__(self, config: dict, logger: logging.Logger) -> None:
        """
        This creates the app variables so that commands can reach them easily.

        For example, the config is available using the following code:
        - self.config # In this class
        - self.app.config # In commands
        """
        self.logger = logger
        self.config = config
        self.tolerance = DEFAULT_TOLERANCE
        self.samples = SampleCounts.fromDict(config.get("samples"))
        self.svg = {"view_box": 1000.0, "radius": 450.0, **config.get("svg", {})}
        self.commands = {}

        self.parser = argparse.ArgumentParser(prog="lune", description="Convex bodies on the sphere: widths, lunes, covering caps.")
        self.parser.add_argument("--config", default=None, help="key = value tolerance override file (default: $LUNE_CONFIG)")
        self.parser.add_argument("--verbose", action="store_true", help="log debug messages")
        self.parser.add_argument("--no-color", action="store_true", help="plain console log lines")
        self.subparsers = self.parser.add_subparsers(dest="command", required=True)

    # This function is used by the command modules to register themselves
    def add_command(self, command) -> None:
        parser = self.subparsers.add_parser(command.name, help=command.description, description=command.description)
        command.add_arguments(parser)
        parser.set_defaults(handler=command)
        self.commands[command.name] = command

    def load_commands(self) -> None:
        """
        Import every enabled module of the commands folder and call its setup(app).
        """
        for extension in enabled_commands(self.config):
            try:
                module = importlib.import_module(f"commands.{extension}")
                module.setup(self)
                self.logger.debug(f"Loaded command '{extension}'")
            except Exception as e:
                exception = f"{type(e).__name__}: {e}"
                self.logger.error(f"Failed to load command {extension}\n{exception}")
        for extension in self.config["disabled_commands"]:
            self.logger.debug(f"Skipping disabled command '{extension}'")

    def on_command_error(self, command: str, error: Exception) -> int:
        """
        The code in this function is executed every time a command raises.

        :param command: The name of the command that failed.
        :param error: The error that has been faced.
        """
        if isinstance(error, LuneError):
            self.logger.error(f"{command}: {type(error).__name__}: {error}")
            return error.exit_code
        if isinstance(error, OSError):
            self.logger.error(f"{command}: {error}")
            return EXIT_IO
        raise error

    def run(self, argv: list[str] | None = None) -> int:
        args = self.parser.parse_args(argv)
        if args.verbose:
            self.logger.setLevel(logging.DEBUG)
        if args.no_color:
            for handler in self.logger.handlers:
                handler.formatter.use_color = False

        try:
            self.tolerance = resolve_tolerance(self.config, args.config)
            self.logger.debug(f"Tolerances: {self.tolerance.toJson()}")
            status = args.handler.run(args)
        except Exception as e:
            return self.on_command_error(args.command, e)

        self.logger.info(f"Executed {args.command} command (exit {status})")
        return status


# This function is used to run the command line, it returns the exit status
def main(argv: list[str] | None = None, config_file: str = CONFIG_FILE) -> int:
    load_dotenv()

    try:
        config = load_config(config_file)
    except LuneError as e:
        print(e, file=sys.stderr)
        return e.exit_code

    logger = setup_logging(config.get("log_file"), logging.INFO)
    logger.debug(f"Python version: {platform.python_version()}")
    logger.debug(f"Running on: {platform.system()} {platform.release()} ({os.name})")

    app = LuneApp(config, logger)
    app.load_commands()
    return app.run(argv)


if __name__ == "__main__":
    sys.exit(main())
