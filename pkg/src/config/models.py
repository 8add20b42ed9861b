"""Data models for field, suite and command-line configuration."""

from dataclasses import dataclass, field
from typing import Iterable, List, Optional

import sympy

from ..arith.finite_field import FieldParams, make_field
from ..carlitz.numbers import CARLITZ_TABLE_KINDS
from ..classical.cauchy import CLASSICAL_TABLE_KINDS
from ..utils.constants import (
    CLI_COMMANDS,
    CLI_MAX_N_CAP,
    CLI_PREC_CAP,
    DEFAULT_E,
    DEFAULT_K_MAX,
    DEFAULT_MAX_N,
    DEFAULT_P,
    DEFAULT_PREC,
    DEFAULT_SEED,
    DEFAULT_SUITE_FIELDS,
    MAX_FAILURES_PER_IDENTITY,
    OUTPUT_FORMATS,
    SERIES_NAMES,
)

COMPUTE_KINDS = list(CARLITZ_TABLE_KINDS) + list(CLASSICAL_TABLE_KINDS)


@dataclass
class FieldSpec:
    """A request for the coefficient field F_r, r = p^e."""
    p: int = DEFAULT_P
    e: int = DEFAULT_E
    modulus: Optional[str] = None  # e.g. "a^2+a+1"; chosen automatically when omitted

    @property
    def r(self) -> int:
        return self.p ** self.e

    def validate(self) -> bool:
        """Validate field parameters; the modulus is checked by make_field."""
        if self.p < 2:
            raise ValueError("p must be >= 2")
        if self.e < 1:
            raise ValueError("e must be >= 1")
        if not sympy.isprime(self.p):
            power = sympy.perfect_power(self.p)
            if power and sympy.isprime(power[0]):
                raise ValueError(f"{self.p} is not prime (use --p {power[0]} --e {power[1]})")
            raise ValueError(f"{self.p} is not prime")
        self.to_field()
        return True

    def to_field(self) -> FieldParams:
        return make_field(self.p, self.e, self.modulus)

    def to_dict(self) -> dict:
        return {'p': self.p, 'e': self.e, 'modulus': self.modulus}

    @classmethod
    def from_dict(cls, data: dict) -> 'FieldSpec':
        return cls(
            p=data.get('p', DEFAULT_P),
            e=data.get('e', DEFAULT_E),
            modulus=data.get('modulus'),
        )


def _default_fields() -> List[FieldSpec]:
    return [FieldSpec(p=p, e=e) for p, e in DEFAULT_SUITE_FIELDS]


@dataclass
class SuiteConfig:
    """Configuration of a verification run."""
    fields: List[FieldSpec] = field(default_factory=_default_fields)
    max_n: int = DEFAULT_MAX_N
    prec: int = DEFAULT_PREC
    k_max: int = DEFAULT_K_MAX
    seed: int = DEFAULT_SEED
    identities: Optional[List[str]] = None  # None runs every registered identity
    max_failures: int = MAX_FAILURES_PER_IDENTITY

    def validate(self, known_identities: Optional[Iterable[str]] = None) -> bool:
        """Validate bounds; identity ids are checked when the registry is supplied."""
        if not self.fields:
            raise ValueError("At least one field is required")
        for spec in self.fields:
            spec.validate()
        if self.max_n < 1:
            raise ValueError(f"max_n bound too small: {self.max_n} (need >= 1)")
        if self.prec < 2:
            raise ValueError(f"prec bound too small: {self.prec} (need >= 2)")
        if self.k_max < 0:
            raise ValueError("k_max must be >= 0")
        if self.max_failures < 1:
            raise ValueError("max_failures must be >= 1")
        if self.identities is not None and known_identities is not None:
            known = set(known_identities)
            unknown = [name for name in self.identities if name not in known]
            if unknown:
                raise ValueError(f"Unknown identities: {', '.join(unknown)}")
        return True

    def to_dict(self) -> dict:
        return {
            'fields': [spec.to_dict() for spec in self.fields],
            'max_n': self.max_n,
            'prec': self.prec,
            'k_max': self.k_max,
            'seed': self.seed,
            'identities': self.identities,
            'max_failures': self.max_failures,
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'SuiteConfig':
        fields = data.get('fields')
        return cls(
            fields=[FieldSpec.from_dict(f) for f in fields] if fields else _default_fields(),
            max_n=data.get('max_n', DEFAULT_MAX_N),
            prec=data.get('prec', DEFAULT_PREC),
            k_max=data.get('k_max', DEFAULT_K_MAX),
            seed=data.get('seed', DEFAULT_SEED),
            identities=data.get('identities'),
            max_failures=data.get('max_failures', MAX_FAILURES_PER_IDENTITY),
        )


@dataclass
class CliConfig:
    """Validated options of one command-line invocation."""
    command: str
    p: int = DEFAULT_P
    e: int = DEFAULT_E
    modulus: Optional[str] = None
    max_n: int = DEFAULT_MAX_N
    order: int = 1
    kind: str = "CC"
    fmt: str = "text"
    prec: Optional[int] = None
    name: str = "logC"
    identity: Optional[str] = None
    output: Optional[str] = None
    unsafe_large: bool = False
    seed: int = DEFAULT_SEED
    all_fields: bool = False  # verify: run the suite fields instead of the single (p, e)

    @property
    def is_carlitz_kind(self) -> bool:
        return self.kind in CARLITZ_TABLE_KINDS

    def field_spec(self) -> FieldSpec:
        return FieldSpec(p=self.p, e=self.e, modulus=self.modulus)

    def validate(self) -> bool:
        """Validate before any computation; raises ValueError naming the bad option."""
        if self.command not in CLI_COMMANDS:
            raise ValueError(f"command must be one of: {', '.join(CLI_COMMANDS)}")
        if self.fmt not in OUTPUT_FORMATS:
            raise ValueError(f"format must be one of: {', '.join(OUTPUT_FORMATS)}")
        if self.order < 1:
            raise ValueError("order must be >= 1")
        if self.command == "verify" and self.max_n < 1:
            raise ValueError(f"max_n bound too small: {self.max_n} (need >= 1)")
        if self.max_n < 0:
            raise ValueError("max_n must be >= 0")
        if self.prec is not None and self.prec < 1:
            raise ValueError("prec must be >= 1")
        if not self.unsafe_large:
            if self.max_n > CLI_MAX_N_CAP:
                raise ValueError(f"max_n {self.max_n} exceeds {CLI_MAX_N_CAP} (use --unsafe-large)")
            if self.prec is not None and self.prec > CLI_PREC_CAP:
                raise ValueError(f"prec {self.prec} exceeds {CLI_PREC_CAP} (use --unsafe-large)")
        if self.command == "compute" and self.kind not in COMPUTE_KINDS:
            raise ValueError(f"kind must be one of: {', '.join(COMPUTE_KINDS)}")
        if self.command == "series" and self.name not in SERIES_NAMES:
            raise ValueError(f"series name must be one of: {', '.join(SERIES_NAMES)}")
        if self.command != "compute" or self.is_carlitz_kind:
            self.field_spec().validate()
        return True

    def to_dict(self) -> dict:
        return {
            'command': self.command,
            'p': self.p,
            'e': self.e,
            'modulus': self.modulus,
            'max_n': self.max_n,
            'order': self.order,
            'kind': self.kind,
            'fmt': self.fmt,
            'prec': self.prec,
            'name': self.name,
            'identity': self.identity,
            'output': self.output,
            'unsafe_large': self.unsafe_large,
            'seed': self.seed,
            'all_fields': self.all_fields,
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'CliConfig':
        return cls(
            command=data['command'],
            p=data.get('p', DEFAULT_P),
            e=data.get('e', DEFAULT_E),
            modulus=data.get('modulus'),
            max_n=data.get('max_n', DEFAULT_MAX_N),
            order=data.get('order', 1),
            kind=data.get('kind', 'CC'),
            fmt=data.get('fmt', 'text'),
            prec=data.get('prec'),
            name=data.get('name', 'logC'),
            identity=data.get('identity'),
            output=data.get('output'),
            unsafe_large=data.get('unsafe_large', False),
            seed=data.get('seed', DEFAULT_SEED),
            all_fields=data.get('all_fields', False),
        )
