"""Allow ``python -m crossint_lab``."""

from .cli.main import main

if __name__ == "__main__":
    main()
