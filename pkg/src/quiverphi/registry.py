"""
The isomorphism-class registry and its JSON file.

Class ids are assigned in registration order, so replaying the same
computation against an empty registry reproduces the same ids.
"""

from __future__ import annotations
import logging
import os
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple, Union

from pydantic import BaseModel, ValidationError

from .algebra import BoundAlgebra
from .decomp import decompose, iso_indecomposable
from .errors import (AlgebraMismatch, FingerprintMismatch, MalformedRegistry, NotIndecomposable, QuiverPhiError,
                     UnknownClass)
from .linalg import Matrix
from .repmod import Representation, is_projective, make_representation

log = logging.getLogger(__name__)

REGISTRY_VERSION = 1
DEFAULT_REGISTRY = os.path.expanduser("~/.quiverphi/registry.json")


@dataclass(frozen=True, order=True)
class ClassId:
    value: int
    projective: bool = field(default=False, compare=False)

    def __str__(self) -> str:
        return f"#{self.value}{'P' if self.projective else ''}"


class IsoRegistry:
    """Representatives of the indecomposable classes met so far, one per class.

    Registration mutates the registry; callers sharing one instance must serialize
    their calls.
    """

    def __init__(self, algebra: BoundAlgebra):
        self.algebra = algebra
        self.fingerprint = algebra.fingerprint
        self._entries: List[Tuple[ClassId, Representation]] = []
        self._by_dims: Dict[Tuple[int, ...], List[int]] = {}
        # class value -> K0 coordinates of the syzygy of its representative
        self.syzygy_classes: Dict[int, Dict[int, int]] = {}

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[Tuple[ClassId, Representation]]:
        return iter(self._entries)

    @property
    def classes(self) -> List[ClassId]:
        return [cid for cid, _ in self._entries]

    def class_id(self, value: Union[int, ClassId]) -> ClassId:
        idx = value.value if isinstance(value, ClassId) else int(value)
        if not 0 <= idx < len(self._entries):
            raise UnknownClass(f"no class #{idx} in registry")
        return self._entries[idx][0]

    def representative(self, value: Union[int, ClassId]) -> Representation:
        return self._entries[self.class_id(value).value][1]

    def lookup(self, X: Representation) -> Optional[ClassId]:
        """The class of the indecomposable X, if already registered."""
        for idx in self._by_dims.get(X.dimension_vector, ()):
            cid, rep = self._entries[idx]
            if iso_indecomposable(rep, X):
                return cid
        return None

    def register(self, M: Representation, check: bool = True) -> ClassId:
        if M.algebra is not self.algebra:
            raise AlgebraMismatch(f"registry is for {self.algebra.name}, module is over {M.algebra.name}")
        if check and len(decompose(M)) != 1:
            raise NotIndecomposable(f"{M!r} is not indecomposable")
        hit = self.lookup(M)
        if hit is not None:
            return hit
        cid = ClassId(len(self._entries), is_projective(M))
        self._entries.append((cid, M.named(M.name or f"X{cid.value}")))
        self._by_dims.setdefault(M.dimension_vector, []).append(cid.value)
        log.debug("registered %s with dims %s", cid, M.dimension_vector)
        return cid

    def register_summands(self, M: Representation) -> List[ClassId]:
        return [self.register(X, check=False) for X in decompose(M)]


# persistence


class ClassDoc(BaseModel):
    id: int
    projective: bool
    name: Optional[str] = None
    dims: Dict[str, int]
    maps: Dict[str, List[List[Union[int, str]]]]


class RegistryDoc(BaseModel):
    version: int = REGISTRY_VERSION
    field: str
    algebra_fingerprint: str
    classes: List[ClassDoc] = []


def registry_document(registry: IsoRegistry) -> RegistryDoc:
    fs = registry.algebra.field
    classes = []
    for cid, rep in registry:
        maps = {label: [[fs.to_json(x) for x in row] for row in m.to_rows()]
                for label, m in rep.maps.items()}
        classes.append(ClassDoc(id=cid.value, projective=cid.projective, name=rep.name,
                                dims=dict(rep.dims), maps=maps))
    return RegistryDoc(field=fs.label, algebra_fingerprint=registry.fingerprint, classes=classes)


def save_registry(registry: IsoRegistry, path: str) -> None:
    folder = os.path.dirname(path)
    if folder:
        os.makedirs(folder, exist_ok=True)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(registry_document(registry).model_dump_json(indent=2))
    log.info("saved %d classes to %s", len(registry), path)


def load_registry(path: str, algebra: BoundAlgebra) -> IsoRegistry:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = RegistryDoc.model_validate_json(fh.read())
    except OSError as e:
        raise MalformedRegistry(f"cannot read registry {path}: {e}") from None
    except ValidationError as e:
        raise MalformedRegistry(f"{path}: {e.errors()[0]['msg']}") from None
    if doc.version != REGISTRY_VERSION:
        raise MalformedRegistry(f"{path}: unsupported registry version {doc.version}")
    if doc.algebra_fingerprint != algebra.fingerprint or doc.field != algebra.field.label:
        raise FingerprintMismatch(
            f"{path} was written for algebra {doc.algebra_fingerprint} over {doc.field}, "
            f"not {algebra.fingerprint} over {algebra.field.label}")
    registry = IsoRegistry(algebra)
    fs = algebra.field
    for expected, cls in enumerate(doc.classes):
        if cls.id != expected:
            raise MalformedRegistry(f"{path}: class ids must be consecutive, found {cls.id} at {expected}")
        try:
            maps = {}
            for label, rows in cls.maps.items():
                cols = cls.dims.get(algebra.quiver.arrow(label).source, 0)
                maps[label] = Matrix.from_rows([[fs.from_json(x) for x in r] for r in rows], fs, cols)
            rep = make_representation(algebra, cls.dims, maps, name=cls.name)
        except (QuiverPhiError, ValueError, ZeroDivisionError) as e:
            raise MalformedRegistry(f"{path}: class {cls.id}: {e}") from None
        cid = ClassId(cls.id, cls.projective)
        registry._entries.append((cid, rep))
        registry._by_dims.setdefault(rep.dimension_vector, []).append(cid.value)
    log.info("loaded %d classes from %s", len(registry), path)
    return registry
