from __future__ import annotations

import pathlib
from typing import Tuple, Union

try:
    from typing import Literal
except ImportError:
    from typing_extensions import Literal

try:
    from typing import Self
except ImportError:
    from typing_extensions import Self

__all__ = ["AnyPath", "Face", "Literal", "Monomial", "OutputFormat", "Self", "VerifyMethod"]


#: Support both pathlib paths and regular strings with AnyPath:
AnyPath = Union[str, pathlib.Path]

#: A face of a complex: a strictly increasing tuple of internal vertex ids.
Face = Tuple[int, ...]

#: An exponent vector indexed by the internal vertex ids of a complex.
Monomial = Tuple[int, ...]

VerifyMethod = Literal["vanishing", "facets"]
OutputFormat = Literal["table", "json"]
