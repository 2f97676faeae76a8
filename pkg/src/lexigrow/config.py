"""Pipeline configuration: an INI file with per-stage sections.

Every option lives at a (section, key) address; the command line exposes a
flag of the same key name that overrides the file value, and both go
through the same parser so they cannot drift apart. Only the workspace
root may additionally come from the environment (LEXIGROW_WORKSPACE).
"""

from __future__ import annotations

import configparser
import os
from dataclasses import dataclass
from pathlib import Path

from lexigrow.errors import ConfigError

WORKSPACE_ENV_VAR = "LEXIGROW_WORKSPACE"

_BOOL_VALUES = {
    "1": True, "true": True, "yes": True, "on": True,
    "0": False, "false": False, "no": False, "off": False,
}


@dataclass(frozen=True)
class Option:
    """Declaration of one configurable value."""

    section: str
    key: str
    kind: str = "str"  # str | int | float | bool | strlist | intlist
    default: object = None
    help: str = ""
    choices: tuple = ()
    required: bool = False


def parse_value(kind: str, raw: str, where: str):
    """Parse a raw option string; `where` names the option in errors."""
    raw = raw.strip()
    try:
        if kind == "str":
            return raw
        if kind == "int":
            return int(raw)
        if kind == "float":
            return float(raw)
        if kind == "bool":
            value = _BOOL_VALUES.get(raw.lower())
            if value is None:
                raise ValueError(f"not a boolean: {raw!r}")
            return value
        if kind == "strlist":
            return tuple(p.strip() for p in raw.split(",") if p.strip())
        if kind == "intlist":
            return tuple(int(p.strip()) for p in raw.split(",") if p.strip())
    except ValueError as exc:
        raise ConfigError(f"{where}: {exc}") from None
    raise ConfigError(f"{where}: unknown option kind {kind!r}")


class ConfigFile:
    """Parsed INI file with raw string access by (section, key)."""

    def __init__(self, values: dict[tuple[str, str], str], path: str = ""):
        self.values = values
        self.path = path

    @classmethod
    def load(cls, path) -> "ConfigFile":
        path = Path(path)
        if not path.is_file():
            raise ConfigError(f"config file not found: {path}")
        parser = configparser.ConfigParser(interpolation=None)
        try:
            with open(path, encoding="utf-8") as fh:
                parser.read_file(fh)
        except (configparser.Error, UnicodeDecodeError) as exc:
            raise ConfigError(f"cannot parse config file {path}: {exc}") from None
        values = {
            (section, key): parser.get(section, key)
            for section in parser.sections()
            for key in parser.options(section)
        }
        return cls(values=values, path=str(path))

    def get(self, section: str, key: str) -> "str | None":
        return self.values.get((section, key))


def resolve_option(option: Option, flag_value, cfg: "ConfigFile | None"):
    """Flag beats config file beats default; validates choices."""
    where = f"[{option.section}] {option.key}"
    if flag_value is not None:
        value = parse_value(option.kind, flag_value, where=f"--{option.key}")
    else:
        raw = cfg.get(option.section, option.key) if cfg else None
        if raw is not None:
            value = parse_value(option.kind, raw, where=where)
        else:
            value = option.default
    if value is None and option.required:
        raise ConfigError(f"{where} is required (set it in the config or pass --{option.key})")
    if value is not None and option.choices and value not in option.choices:
        raise ConfigError(
            f"{where}: {value!r} is not one of {', '.join(map(str, option.choices))}"
        )
    return value


def resolve_options(options, args, cfg: "ConfigFile | None") -> dict:
    """Resolve a whole option table against parsed argparse flags."""
    resolved = {}
    for option in options:
        flag_value = getattr(args, option.key, None)
        resolved[option.key] = resolve_option(option, flag_value, cfg)
    return resolved


def workspace_dir(args, cfg: "ConfigFile | None") -> Path:
    """Workspace root: flag, then config, then environment, then cwd."""
    flag = getattr(args, "workspace", None)
    value = (
        flag
        or (cfg.get("paths", "workspace") if cfg else None)
        or os.environ.get(WORKSPACE_ENV_VAR)
        or "."
    )
    path = Path(value)
    path.mkdir(parents=True, exist_ok=True)
    return path
