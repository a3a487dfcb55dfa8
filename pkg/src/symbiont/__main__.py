"""Main entry point for the application."""

##############################################################################
# Python imports.
import logging
import sys
from typing import Sequence

##############################################################################
# Local imports.
from .app import parse_arguments, run
from .app.data import ExitState


##############################################################################
def main(arguments: Sequence[str] | None = None) -> None:
    """Main entry point.

    Args:
        arguments: The command line arguments; `None` for the process
            arguments.
    """
    config = parse_arguments(arguments)
    logging.basicConfig(
        level=logging.DEBUG if config.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    result = run(config)
    match result.state:
        case ExitState.ERROR:
            sys.stderr.buffer.write(result.output)
            sys.stderr.flush()
        case _:
            sys.stdout.buffer.write(result.output)
            sys.stdout.flush()
    sys.exit(int(result.state))


##############################################################################
if __name__ == "__main__":
    main()

### __main__.py ends here
