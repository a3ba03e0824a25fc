from loguru import logger
import sys


class Logger:
    """
    Tagged console logger shared by every component.

    Messages go to stderr so that command output on stdout stays parseable.
    """
    logger.remove()
    logger.add(sys.stderr, colorize=True, format="{message}")

    def __init__(self, name: str, verbose: bool = True) -> None:
        self.name = name
        self.verbose = verbose

    def __log_message(self, tag: str, message: str, color: str) -> None:
        message = f"<bold><{color}>[{tag}]</{color}> <green>{self.name}:</green></bold> {message}"
        logger.opt(colors=True).info(message)

    def info(self, message: str) -> None:
        if self.verbose:
            self.__log_message("INFO", message, "blue")

    def debug(self, message: str) -> None:
        if self.verbose:
            self.__log_message("DEBUG", message, "magenta")

    def warning(self, message: str) -> None:
        self.__log_message("WARNING", message, "yellow")

    def error(self, message: str) -> None:
        self.__log_message("ERROR", message, "red")
