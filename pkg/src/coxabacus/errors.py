"""Exception types shared across the package."""


class CoxabacusError(Exception):
    """Base class for all validation errors raised by this package."""


class RankTooSmall(CoxabacusError):
    """Rank below the minimum supported for the chosen family."""


class ResidueClash(CoxabacusError):
    """Two window entries share the same residue mod N."""


class ZeroResidue(CoxabacusError):
    """A window entry is divisible by N."""


class BalanceViolation(CoxabacusError):
    """Window entries fail w(i) + w(N-i) = N."""


class NotMinimal(CoxabacusError):
    """Operation requires a minimal-length coset representative."""


class ParityViolation(CoxabacusError):
    """Object fails the evenness condition of its family."""


class NotActiveBead(CoxabacusError):
    """Position is not an active bead of the abacus."""


class NotACore(CoxabacusError):
    """Partition has a hook length divisible by 2n."""


class NotSymmetric(CoxabacusError):
    """Partition is not equal to its transpose."""


class BoxOutside(CoxabacusError):
    """Box coordinates fall outside the partition."""


class MalformedBounded(CoxabacusError):
    """Bounded partition violates its structural constraints."""


class StuckPeel(CoxabacusError):
    """Central peeling could not remove any box (invalid input)."""


class NotEnumerated(CoxabacusError):
    """Element missing from the oracle's length table."""


class UnrenderableCombination(CoxabacusError):
    """Requested renderer does not support this input."""
