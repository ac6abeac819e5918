"""Lookup of the transcribed tables and their registered amendments by family."""

from quasifiliform_tp.catalog import Family, FamilyId, validate_family
from quasifiliform_tp.tpa import exceptional, g1, g2, g3
from quasifiliform_tp.tpa.base import TPVariant

from functools import lru_cache
import logging

logger = logging.getLogger(__name__)

_MODULES = {
    Family.G1N1: g1,
    Family.G2N1: g2,
    Family.G3N1: g3,
    Family.G1_7: exceptional,
    Family.G2_9: exceptional,
    Family.G3_11: exceptional,
}


class UnknownVariantError(KeyError):
    """Raised when a variant key is not registered for a family"""

    pass


@lru_cache(maxsize=None)
def _printed(family_id: FamilyId) -> dict[str, TPVariant]:
    validate_family(family_id)
    tables = _MODULES[family_id.family].variants(family_id)
    logger.debug(f"Loaded {len(tables)} tables for {family_id.label}")
    return {v.key: v for v in tables}


@lru_cache(maxsize=None)
def _amended(family_id: FamilyId) -> dict[str, TPVariant]:
    validate_family(family_id)
    return _MODULES[family_id.family].amendments(family_id)


def variants(family_id: FamilyId) -> list[TPVariant]:
    """The printed tables of a family in key order.

    :raises FamilyError: Raised if the dimension violates the family constraint
    """
    return list(_printed(family_id).values())


def list_variants(family_id: FamilyId) -> list[str]:
    return list(_printed(family_id))


def get_variant(family_id: FamilyId, key: str) -> TPVariant:
    """Returns the printed table registered under ``key``.

    :raises UnknownVariantError: Raised if no such table exists
    """
    tables = _printed(family_id)
    if key not in tables:
        raise UnknownVariantError(
            f"No variant {key!r} for {family_id.label}; known: {', '.join(tables)}"
        )
    return tables[key]


def get_amendment(family_id: FamilyId, key: str) -> TPVariant | None:
    """Returns the amended table for ``key``, or None if the printed one stands.

    :raises UnknownVariantError: Raised if ``key`` is not a variant of the family
    """
    get_variant(family_id, key)
    return _amended(family_id).get(key)


def amended_keys(family_id: FamilyId) -> list[str]:
    return list(_amended(family_id))
