"""Exception types raised by the library.

Every contract violation maps to a dedicated class so callers (and tests)
can distinguish failure modes. Classes double-inherit from the closest
builtin so generic handlers keep working.
"""


class PimError(Exception):
    """Base class for all library errors."""


class InvalidArgument(PimError, ValueError):
    """A constructor or operation argument violates its precondition."""


class CapacityExceeded(PimError):
    """A DPU MRAM write would overflow the configured capacity."""


class UnknownDpu(PimError, IndexError):
    """DPU id outside the fleet."""


class MramRangeError(PimError, IndexError):
    """MRAM read region lies (partly) outside the written area."""


class TaskletLimitExceeded(PimError, ValueError):
    """Requested tasklet count outside [1, max_tasklets]."""


class WramLimitExceeded(PimError, ValueError):
    """Per-tasklet stage buffer does not fit wram_bytes / n_tasklets."""


class MissingInput(PimError, KeyError):
    """Kernel input region is not resident in DPU MRAM."""


class EmptyTimeline(PimError, ValueError):
    """Phase breakdown requested for an empty (or zero-duration) timeline."""


class MalformedInput(PimError, ValueError):
    """Byte stream is not a valid varint encoding."""


class MalformedChunk(PimError, ValueError):
    """Compressed container fails structural validation."""


class DanglingRef(PimError, ValueError):
    """Dedup reference points past the unique-block list."""


class LengthMismatch(PimError, ValueError):
    """Operands have incompatible lengths."""


class ResidueRangeError(PimError, ValueError):
    """An operand is not reduced modulo q."""


class RingMismatch(PimError, ValueError):
    """Polynomials belong to different rings."""


class InvalidPartyCount(PimError, ValueError):
    """Secret sharing requires at least two parties."""


class MissingShare(PimError, ValueError):
    """Reconstruction did not receive one share per party."""


class TripleReuse(PimError, RuntimeError):
    """A Beaver triple was used more than once."""


class PlaintextOutOfRange(PimError, ValueError):
    """Plaintext coefficients must be reduced modulo t."""


class NoiseOverflow(PimError, ArithmeticError):
    """Ciphertext noise budget exhausted; decryption would be unreliable."""


class ParamsMismatch(PimError, ValueError):
    """Protocol objects built under different parameters were combined."""


class UnknownKernel(PimError, KeyError):
    """Kernel id not present in the registry."""


class ConfigInvalid(PimError, ValueError):
    """Orchestration or cost-model configuration is inconsistent."""
