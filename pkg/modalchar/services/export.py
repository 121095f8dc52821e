"""Reading and writing pointed models and relations (JSON and Graphviz DOT)."""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Iterable, List, Tuple

from pydantic import ValidationError

from ..core.errors import ModelFormatError
from ..schemas.model_file import ModelFile, StateRecord
from ..schemas.relation import RelationFile
from .kripke import PointedModel

LOGGER = logging.getLogger(__name__)


def _state_order(model: PointedModel) -> List[str]:
    # Point first, then the remaining ids sorted, so output does not depend on
    # how the model happened to be built.
    rest = sorted(state for state in model.states if state != model.point)
    return [model.point] + rest


def model_to_file(model: PointedModel) -> ModelFile:
    return ModelFile(
        signature=list(model.signature),
        states=[
            StateRecord(id=state, props=sorted(model.props(state), key=model.signature.index))
            for state in _state_order(model)
        ],
        edges=[[a, b] for a, b in sorted(model.edges)],
        point=model.point,
    )


def model_to_dict(model: PointedModel) -> dict:
    return model_to_file(model).model_dump()


def model_from_file(data: ModelFile) -> PointedModel:
    return PointedModel.build(
        signature=data.signature,
        states=[state.id for state in data.states],
        edges=[(a, b) for a, b in data.edges],
        valuation={state.id: state.props for state in data.states},
        point=data.point,
    )


def model_from_dict(payload: dict) -> PointedModel:
    try:
        data = ModelFile.model_validate(payload)
    except ValidationError as exc:
        raise ModelFormatError(f"invalid model: {exc.errors()[0]['msg']}") from exc
    return model_from_file(data)


def model_to_json(model: PointedModel) -> str:
    return json.dumps(model_to_dict(model), indent=2)


def read_model(path: str | Path) -> PointedModel:
    source = Path(path)
    try:
        payload = json.loads(source.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ModelFormatError(f"{source}: not valid JSON ({exc.msg})") from exc
    except OSError as exc:
        raise ModelFormatError(f"{source}: cannot read model file ({exc.strerror})") from exc
    try:
        return model_from_dict(payload)
    except ModelFormatError as exc:
        raise ModelFormatError(f"{source}: {exc}") from exc


def write_model(model: PointedModel, path: str | Path) -> Path:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(model_to_json(model) + "\n", encoding="utf-8")
    LOGGER.debug("wrote model with %d states to %s", len(model.states), target)
    return target


def relation_to_dict(pairs: Iterable[Tuple[str, str]]) -> dict:
    return RelationFile(pairs=[[a, b] for a, b in sorted(pairs)]).model_dump()


def read_relation(path: str | Path) -> frozenset[Tuple[str, str]]:
    source = Path(path)
    try:
        data = RelationFile.model_validate(json.loads(source.read_text(encoding="utf-8")))
    except (json.JSONDecodeError, ValidationError) as exc:
        raise ModelFormatError(f"{source}: invalid relation file") from exc
    return frozenset((a, b) for a, b in data.pairs)


def _dot_quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def model_to_dot(model: PointedModel, name: str = "model") -> str:
    """Nodes labelled ``id {props}``; the point is drawn as a double circle."""

    lines = [f"digraph {_dot_quote(name)} {{"]
    for state in _state_order(model):
        props = ",".join(sorted(model.props(state)))
        shape = "doublecircle" if state == model.point else "circle"
        label = _dot_quote(f"{state} {{{props}}}")
        lines.append(f"  {_dot_quote(state)} [label={label}, shape={shape}];")
    for a, b in sorted(model.edges):
        lines.append(f"  {_dot_quote(a)} -> {_dot_quote(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


__all__ = [
    "model_from_dict",
    "model_from_file",
    "model_to_dict",
    "model_to_dot",
    "model_to_file",
    "model_to_json",
    "read_model",
    "read_relation",
    "relation_to_dict",
    "write_model",
]
