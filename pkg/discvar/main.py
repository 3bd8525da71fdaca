import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from discvar.cli import parse_config, run
from discvar.shared.errors import UsageError

logger = logging.getLogger("discvar")


def main(argv: Optional[List[str]] = None) -> int:
    """Exit codes: 0 success, 1 failed checks or computation errors, 2 invalid arguments"""
    try:
        config = parse_config(argv)
    except ValidationError as e:
        print(f"discvar: invalid arguments\n{e}", file=sys.stderr)
        return 2
    except UsageError as e:
        print(f"discvar: {e.message}", file=sys.stderr)
        return 2

    # Logs go to stderr; reports go to stdout
    logging.basicConfig(
        level=getattr(logging, config.log_level),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )

    try:
        return run(config)
    except UsageError as e:
        logger.error(e.message)
        return 2
    except Exception:
        logger.exception(f"{config.command} failed")
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
