"""Allow ``python -m surreal``."""

from surreal.cli.runner import main

if __name__ == "__main__":
    raise SystemExit(main())
