"""Robot selection for the command line: description files and builtins"""

import os
import sys
from typing import Optional

from chain import SerialChain, load_robot
from config.settings import Settings
from validation.errors import InputError
from .oracle import TwoLinkParams, two_link_chain


def fixtures_dir() -> str:
    """Directory of the shipped robot descriptions, also inside a frozen build"""
    base = getattr(sys, "_MEIPASS", None)
    if base:
        return os.path.join(base, "cli", "fixtures")
    return os.path.join(os.path.dirname(os.path.abspath(__file__)), "fixtures")


def load_builtin(name: str) -> SerialChain:
    if name not in Settings.BUILTIN_ROBOTS:
        raise InputError(
            f"unknown builtin robot {name!r}; choose from {', '.join(Settings.BUILTIN_ROBOTS)}"
        )
    if name == "twolink":
        return two_link_chain(TwoLinkParams())
    return load_robot(os.path.join(fixtures_dir(), f"{name}.json"))


def resolve_robot(robot_path: Optional[str], builtin: Optional[str]) -> SerialChain:
    if robot_path and builtin:
        raise InputError("use either --robot or --builtin, not both")
    if robot_path:
        return load_robot(robot_path)
    if builtin:
        return load_builtin(builtin)
    raise InputError("a robot is required: pass --robot <path> or --builtin <name>")
