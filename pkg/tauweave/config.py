# -*- coding: utf-8 -*-
"""Config

run settings for the command line, layered from built-in defaults,
TAUWEAVE_<FIELD> environment variables and command line flags.

"""
import os
from dataclasses import dataclass, fields, replace
from .errors import UsageError
from .models import presentation_from_selector
from .silting import DEFAULT_MAX_RANK
from .weak_order import DEFAULT_BUDGET_NODES
from .algebra import DEFAULT_DEGREE_CAP

ENV_PREFIX = "TAUWEAVE_"
FORMATS = ("json", "dot", "tsv")
COMMANDS = ("weak-order", "xi", "sttilt", "verify")
# verify prints a text report and only takes the default
COMMAND_FORMATS = {
    "weak-order": ("json", "dot"),
    "xi": ("json", "tsv"),
    "sttilt": ("json", "dot"),
    "verify": ("json",),
}

_TRUE = ("1", "true", "yes")
_FALSE = ("0", "false", "no")

def parse_bool(text):
    value = str(text).strip().lower()
    if value in _TRUE:
        return True
    if value in _FALSE:
        return False
    raise UsageError("parse_bool: expected one of {}, got {!r}".format(_TRUE + _FALSE, text))


@dataclass(frozen=True)
class RunConfig:
    """settings of one command run"""
    command: str = "verify"
    n: int = 3
    algebra: str = None
    out: str = None
    fmt: str = "json"
    check_mirror: bool = False
    check_oracle: bool = False
    budget_nodes: int = DEFAULT_BUDGET_NODES
    max_silting_rank: int = DEFAULT_MAX_RANK
    degree_cap: int = DEFAULT_DEGREE_CAP
    samples: int = 2000
    seed: int = 0
    verbose: bool = False

    @classmethod
    def from_options(cls, command, options=None, environ=None):
        """defaults, then TAUWEAVE_* variables, then flags that were given.

        Parameters
        ----------
        command : str
        options : optparse.Values or dict
            flag values; None means the flag was not given
        environ : mapping
            defaults to os.environ

        Returns
        -------
        RunConfig

        """
        environ = os.environ if environ is None else environ
        if options is not None and not isinstance(options, dict):
            options = vars(options)
        options = options or {}
        values = {"command": command}
        for f in fields(cls):
            if f.name == "command":
                continue
            raw = environ.get(ENV_PREFIX + f.name.upper())
            if options.get(f.name) is not None:
                raw = options[f.name]
            if raw is None:
                continue
            values[f.name] = _convert(f.name, f.type, raw)
        config = cls(**values)
        config.validate()
        return config

    def replace(self, **changes):
        return replace(self, **changes)

    def validate(self):
        """raise UsageError on an unusable setting"""
        if self.command not in COMMANDS:
            raise UsageError("RunConfig: unknown command {!r}".format(self.command))
        if self.n < 1:
            raise UsageError("RunConfig: n must be at least 1, got {}".format(self.n))
        for name in ("budget_nodes", "max_silting_rank", "degree_cap", "samples"):
            if getattr(self, name) < 1:
                raise UsageError("RunConfig: {} must be positive, got {}".format(
                    name, getattr(self, name)))
        if self.fmt not in FORMATS:
            raise UsageError("RunConfig: format must be one of {}, got {!r}".format(
                FORMATS, self.fmt))
        if self.fmt not in COMMAND_FORMATS[self.command]:
            raise UsageError("RunConfig: {} writes {}, not {}".format(
                self.command, " or ".join(COMMAND_FORMATS[self.command]), self.fmt))
        if self.algebra is not None:
            presentation_from_selector(self.algebra)

def _convert(name, kind, raw):
    if kind in (bool, "bool"):
        return raw if isinstance(raw, bool) else parse_bool(raw)
    if kind in (int, "int"):
        try:
            return int(raw)
        except (TypeError, ValueError):
            raise UsageError("RunConfig: {} must be an integer, got {!r}".format(name, raw))
    return str(raw)
