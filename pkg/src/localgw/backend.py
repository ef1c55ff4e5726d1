"""Kernel selection: compiled extension if importable, else pure Python.

Set ``LOCALGW_PURE=1`` to force the pure backend (used by the benchmark
and to reproduce results without a compiler).
"""

import os

if os.environ.get("LOCALGW_PURE") == "1":
    from . import _polycore as impl
else:
    try:
        from . import _polycore_cy as impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _polycore as impl

BACKEND = impl.BACKEND

SHIFT1 = impl.SHIFT1
SHIFT2 = impl.SHIFT2
MASK = impl.MASK

pack = impl.pack
unpack = impl.unpack
p_add = impl.p_add
p_neg = impl.p_neg
p_sub = impl.p_sub
p_mul = impl.p_mul
p_mul_term = impl.p_mul_term
p_divexact = impl.p_divexact
p_int_content = impl.p_int_content
p_div_int = impl.p_div_int
p_mono_min = impl.p_mono_min
p_shift_down = impl.p_shift_down
