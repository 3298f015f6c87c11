import importlib
import sys
from typing import List, Sequence

REQUIRED_PACKAGES = ("numpy", "scipy")


def missing_dependencies(packages: Sequence[str] = REQUIRED_PACKAGES) -> List[str]:
    missing = []
    for package in packages:
        try:
            importlib.import_module(package)
        except ImportError:
            missing.append(package)
    return missing


def check_dependencies(packages: Sequence[str] = REQUIRED_PACKAGES) -> bool:
    """Report missing runtime packages; installing them is left to the user"""
    missing = missing_dependencies(packages)
    if missing:
        print("Missing dependencies detected:", file=sys.stderr)
        for package in missing:
            print(f"- {package}", file=sys.stderr)
        print(f"Install them with: pip install {' '.join(missing)}", file=sys.stderr)
        return False
    return True


if __name__ == "__main__":
    if check_dependencies():
        print("All dependencies are satisfied.", file=sys.stderr)
