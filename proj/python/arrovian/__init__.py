"""Nerve complexes, chromatic map enumeration and Arrow verdicts for
preference domains."""

from arrovian._core import (
    Domain,
    DomainParseError,
    Nerve,
    PreconditionError,
    arrow_verdict,
    audit,
    build_nerve,
    check_domain,
    enumerate_maps,
    enumerate_rankings,
    gen_domain,
    is_value_restricted,
    parse_domain,
    probe_super,
    serialize_domain,
    social_nerve_counts,
    splitmix64,
    ultrafilters,
    __version__,
)

__all__ = [
    "Domain",
    "DomainParseError",
    "Nerve",
    "PreconditionError",
    "arrow_verdict",
    "audit",
    "build_nerve",
    "check_domain",
    "enumerate_maps",
    "enumerate_rankings",
    "gen_domain",
    "is_value_restricted",
    "parse_domain",
    "probe_super",
    "serialize_domain",
    "social_nerve_counts",
    "splitmix64",
    "ultrafilters",
    "__version__",
]
