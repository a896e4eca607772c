"""
Problem files: a line-oriented, sectioned description of a base field, a
linear system, seed relations, free-standing ideals and engine options.

Example::

    # sigma(y) = t y over QQ(t)
    [field]
    variables = t
    partial = t

    [sigma s]
    t = t + 1
    inverse t = t - 1

    [system]
    n = 1
    A s = [[t]]

    [seed 1]
    X'[1,1] - t*X[1,1]

Blank lines and ``#`` comments are ignored. Inside ``[seed d]`` and
``[ideal NAME]`` sections, lines without ``=`` are generators.
"""

from dataclasses import dataclass, field as dc_field
from typing import Callable, Dict, List, Optional, Tuple

from ..basefield import BaseField, DifferenceDifferentialField, OperatorSpec
from ..config import EngineConfig
from ..exceptions import ExpressionSyntaxError, PVError, ProblemFileError
from ..groebner import IdealPresentation
from ..jetring import FilteredElement, jet_ring
from ..linsys import LinearSystem, parse_matrix
from ..polyring import RATIONALS, PolyRing, TermOrder

OPTION_KEYS = (
    "max_reductions",
    "max_degree",
    "max_level",
    "constants_degree_bound",
    "max_closure_rounds",
    "saturation_power_bound",
)

COEFFICIENTS_QQ = "QQ"
COEFFICIENTS_FIELD = "field"


@dataclass
class _Line:
    number: int
    text: str  # without comment, stripped on the right
    indent: int  # column of the first non-blank character (0-based)

    @property
    def body(self) -> str:
        return self.text.strip()


@dataclass
class _Section:
    kind: str
    arg: str
    line: int
    lines: List[_Line] = dc_field(default_factory=list)


@dataclass
class OperatorBlock:
    """Images (and, for automorphisms, inverse images) of one operator, as text."""
    op_id: str
    kind: str  # "sigma" or "delta"
    images: Dict[str, str] = dc_field(default_factory=dict)
    inverse_images: Dict[str, str] = dc_field(default_factory=dict)


@dataclass
class IdealBlock:
    """A free-standing ideal of a polynomial ring."""
    name: str
    variables: Tuple[str, ...]
    order: str
    coefficients: str
    presentation: IdealPresentation


@dataclass
class ProblemFile:
    """
    A parsed problem file.

    Attributes:
        dfield: The base field with its operators
        system: The linear system
        seeds: level -> seed relations
        ideals: name -> free-standing ideal
        config: Engine configuration from the ``[options]`` section
        options: The option values set explicitly in the file
    """
    dfield: DifferenceDifferentialField
    system: LinearSystem
    partial_variable: str
    operator_blocks: List[OperatorBlock]
    seeds: Dict[int, List[FilteredElement]]
    ideals: Dict[str, IdealBlock]
    config: EngineConfig
    options: Dict[str, int]

    def seed_texts(self, level: int) -> List[str]:
        return [s.to_text() for s in self.seeds.get(level, [])]

    def ideal(self, name: str) -> IdealBlock:
        try:
            return self.ideals[name]
        except KeyError:
            raise ProblemFileError(f"no [ideal {name}] section") from None

    def to_text(self) -> str:
        """The canonical form; parsing it gives back an equal ProblemFile."""
        out = ["[field]"]
        out.append("variables = " + ", ".join(self.dfield.field.names))
        out.append(f"partial = {self.partial_variable}")
        for block in sorted(self.operator_blocks, key=lambda b: (b.kind, b.op_id)):
            out.append("")
            out.append(f"[{block.kind} {block.op_id}]")
            op = self.dfield.operator(block.op_id)
            for name, image in zip(self.dfield.field.names, op.images):
                if image != (self.dfield.field.gen(name) if op.is_automorphism else self.dfield.field.zero):
                    out.append(f"{name} = {image.to_text()}")
            if op.is_automorphism:
                for name, image in zip(self.dfield.field.names, op.inverse_images):
                    if image != self.dfield.field.gen(name):
                        out.append(f"inverse {name} = {image.to_text()}")
        out.append("")
        out.append("[system]")
        out.append(f"n = {self.system.n}")
        for op_id, M in self.system.A.items():
            out.append(f"A {op_id} = {M.to_text()}")
        for op_id, M in self.system.B.items():
            out.append(f"B {op_id} = {M.to_text()}")
        for level in sorted(self.seeds):
            out.append("")
            out.append(f"[seed {level}]")
            out.extend(self.seed_texts(level))
        for name in sorted(self.ideals):
            block = self.ideals[name]
            out.append("")
            out.append(f"[ideal {name}]")
            out.append("variables = " + ", ".join(block.variables))
            out.append(f"order = {block.order}")
            out.append(f"coefficients = {block.coefficients}")
            out.extend(g.to_text() for g in block.presentation.generators)
        if self.options:
            out.append("")
            out.append("[options]")
            for key in OPTION_KEYS:
                if key in self.options:
                    out.append(f"{key} = {self.options[key]}")
        return "\n".join(out) + "\n"

    def __eq__(self, other) -> bool:
        return isinstance(other, ProblemFile) and self.to_text() == other.to_text()


def _split_lines(text: str) -> List[_Section]:
    sections: List[_Section] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].rstrip()
        if not content.strip():
            continue
        indent = len(content) - len(content.lstrip())
        stripped = content.strip()
        if stripped.startswith("["):
            if not stripped.endswith("]"):
                raise ProblemFileError("unterminated section header", number, indent + 1)
            header = stripped[1:-1].split()
            if not header:
                raise ProblemFileError("empty section header", number, indent + 1)
            kind, arg = header[0], " ".join(header[1:])
            if kind not in ("field", "sigma", "delta", "system", "seed", "ideal", "options"):
                raise ProblemFileError(f"unknown section [{kind}]", number, indent + 2)
            sections.append(_Section(kind, arg, number))
            continue
        if not sections:
            raise ProblemFileError("content before the first section", number, indent + 1)
        sections[-1].lines.append(_Line(number, content, indent))
    return sections


def _key_value(line: _Line) -> Tuple[str, str, int]:
    """Split ``key = value``; returns (key, value, 1-based column of value)."""
    key, sep, value = line.text.partition("=")
    if not sep:
        raise ProblemFileError("expected 'key = value'", line.number, line.indent + 1)
    column = len(key) + 2 + (len(value) - len(value.lstrip()))
    return key.strip(), value.strip(), column


def _parse_value(parse: Callable[[str], object], text: str, line: int, column: int):
    """Run an expression parser and anchor its errors in the file."""
    try:
        return parse(text)
    except ExpressionSyntaxError as exc:
        raise ProblemFileError(exc.reason, line, column + exc.column - 1) from None


def _int_value(text: str, line: int, column: int) -> int:
    try:
        return int(text)
    except ValueError:
        raise ProblemFileError(f"expected an integer, got {text!r}", line, column) from None


def _names(text: str) -> Tuple[str, ...]:
    return tuple(name.strip() for name in text.split(",") if name.strip())


def _single(sections: List[_Section], kind: str, required: bool) -> Optional[_Section]:
    found = [s for s in sections if s.kind == kind]
    if len(found) > 1:
        raise ProblemFileError(f"duplicate [{kind}] section", found[1].line, 1)
    if required and not found:
        raise ProblemFileError(f"missing [{kind}] section")
    return found[0] if found else None


def _parse_field(section: _Section) -> Tuple[BaseField, str, int]:
    variables = partial = None
    partial_line = section.line
    for line in section.lines:
        key, value, column = _key_value(line)
        if key == "variables":
            variables = _names(value)
        elif key == "partial":
            partial, partial_line = value, line.number
        else:
            raise ProblemFileError(f"unknown key {key!r} in [field]", line.number, line.indent + 1)
    if not variables:
        raise ProblemFileError("[field] needs 'variables = ...'", section.line, 1)
    if partial is None:
        raise ProblemFileError("[field] needs 'partial = VARIABLE'", section.line, 1)
    try:
        base = BaseField(variables)
    except PVError as exc:
        raise ProblemFileError(str(exc), section.line, 1) from None
    if partial not in variables:
        raise ProblemFileError(f"partial variable {partial!r} is not a field variable", partial_line, 1)
    return base, partial, partial_line


def _parse_operator(section: _Section, base: BaseField) -> Tuple[OperatorBlock, OperatorSpec]:
    op_id = section.arg
    if not op_id or " " in op_id:
        raise ProblemFileError(f"[{section.kind}] needs a single operator id", section.line, 1)
    block = OperatorBlock(op_id, section.kind)
    images, inverse_images = {}, {}
    for line in section.lines:
        key, value, column = _key_value(line)
        words = key.split()
        inverse = len(words) == 2 and words[0] == "inverse"
        if inverse and section.kind != "sigma":
            raise ProblemFileError("inverse images belong to automorphisms", line.number, line.indent + 1)
        name = words[-1]
        if len(words) > 2 or (len(words) == 2 and not inverse) or name not in base.names:
            raise ProblemFileError(f"unknown key {key!r} in [{section.kind} {op_id}]", line.number, line.indent + 1)
        target = inverse_images if inverse else images
        if name in target:
            raise ProblemFileError(f"duplicate image of {name}", line.number, line.indent + 1)
        target[name] = _parse_value(base.parse, value, line.number, column)
        (block.inverse_images if inverse else block.images)[name] = value
    if section.kind == "sigma":
        missing = [name for name in images if name not in inverse_images]
        if missing:
            raise ProblemFileError(
                f"automorphism {op_id!r}: missing inverse image of {missing[0]}", section.line, 1
            )
        return block, OperatorSpec.automorphism(base, op_id, images, inverse_images)
    return block, OperatorSpec.derivation(base, op_id, images)


def _parse_system(section: _Section, dfield: DifferenceDifferentialField, max_level: int) -> LinearSystem:
    n = None
    matrices: Dict[str, Dict[str, object]] = {"A": {}, "B": {}}
    anchor: Dict[str, int] = {}
    for line in section.lines:
        key, value, column = _key_value(line)
        words = key.split()
        if words == ["n"]:
            n = _int_value(value, line.number, column)
            continue
        if len(words) != 2 or words[0] not in matrices:
            raise ProblemFileError(f"unknown key {key!r} in [system]", line.number, line.indent + 1)
        which, op_id = words
        if op_id in matrices[which]:
            raise ProblemFileError(f"duplicate matrix {which} {op_id}", line.number, line.indent + 1)
        try:
            matrices[which][op_id] = parse_matrix(dfield.field, value)
        except ExpressionSyntaxError as exc:
            raise ProblemFileError(f"matrix entry: {exc.reason}", line.number, column) from None
        except ValueError as exc:
            raise ProblemFileError(str(exc), line.number, column) from None
        anchor[op_id] = line.number
    if n is None:
        raise ProblemFileError("[system] needs 'n = ...'", section.line, 1)
    try:
        return LinearSystem(dfield, n, matrices["A"], matrices["B"], max_level=max_level)
    except PVError as exc:
        failing = [op for op in anchor if repr(op) in str(exc)]
        where = anchor[failing[0]] if failing else section.line
        raise ProblemFileError(str(exc), where, 1) from None


def _parse_options(section: _Section) -> Dict[str, int]:
    options = {}
    for line in section.lines:
        key, value, column = _key_value(line)
        if key not in OPTION_KEYS:
            raise ProblemFileError(f"unknown option {key!r}", line.number, line.indent + 1)
        options[key] = _int_value(value, line.number, column)
    return options


def _parse_seed(section: _Section, system: LinearSystem, config: EngineConfig) -> Tuple[int, List[FilteredElement]]:
    level = _int_value(section.arg, section.line, 7)
    if level < 0 or level > config.max_level:
        raise ProblemFileError(f"seed level must be between 0 and {config.max_level}", section.line, 7)
    ring = jet_ring(system.field, system.n, level)
    seeds = []
    for line in section.lines:
        if "=" in line.text:
            raise ProblemFileError("seed sections hold generators only", line.number, line.indent + 1)
        seeds.append(_parse_value(ring.parse, line.body, line.number, line.indent + 1))
    return level, seeds


def _parse_ideal(section: _Section, base: BaseField) -> IdealBlock:
    name = section.arg
    if not name:
        raise ProblemFileError("[ideal] needs a name", section.line, 1)
    variables, order, coefficients = None, "grevlex", COEFFICIENTS_QQ
    generator_lines = []
    for line in section.lines:
        if "=" not in line.text:
            generator_lines.append(line)
            continue
        key, value, column = _key_value(line)
        if key == "variables":
            variables = _names(value)
        elif key == "order":
            if value not in ("lex", "grevlex"):
                raise ProblemFileError(f"unknown term order {value!r}", line.number, column)
            order = value
        elif key == "coefficients":
            if value not in (COEFFICIENTS_QQ, COEFFICIENTS_FIELD):
                raise ProblemFileError("coefficients must be QQ or field", line.number, column)
            coefficients = value
        else:
            raise ProblemFileError(f"unknown key {key!r} in [ideal {name}]", line.number, line.indent + 1)
    if not variables:
        raise ProblemFileError(f"[ideal {name}] needs 'variables = ...'", section.line, 1)
    coefficient_field = RATIONALS if coefficients == COEFFICIENTS_QQ else base
    try:
        ring = PolyRing(variables, coefficient_field, TermOrder.from_name(order))
    except ValueError as exc:
        raise ProblemFileError(str(exc), section.line, 1) from None
    gens = [_parse_value(ring.parse, line.body, line.number, line.indent + 1) for line in generator_lines]
    return IdealBlock(name, variables, order, coefficients, IdealPresentation(ring, gens))


def parse_problem(text: str) -> ProblemFile:
    """
    Parse a problem file.

    Raises:
        ProblemFileError: With the line and column of the offending text,
            for syntax errors, unknown keys and semantic errors
    """
    sections = _split_lines(text)
    field_section = _single(sections, "field", required=True)
    system_section = _single(sections, "system", required=True)
    options_section = _single(sections, "options", required=False)

    options = _parse_options(options_section) if options_section else {}
    try:
        config = EngineConfig(**options)
    except ValueError as exc:
        raise ProblemFileError(str(exc), options_section.line, 1) from None

    base, partial, partial_line = _parse_field(field_section)
    blocks, specs = [], []
    for section in sections:
        if section.kind in ("sigma", "delta"):
            block, spec = _parse_operator(section, base)
            blocks.append(block)
            specs.append(spec)
    try:
        dfield = DifferenceDifferentialField.with_parameter(base, partial, specs)
    except PVError as exc:
        raise ProblemFileError(str(exc), field_section.line, 1) from None

    system = _parse_system(system_section, dfield, config.max_level)

    seeds: Dict[int, List[FilteredElement]] = {}
    ideals: Dict[str, IdealBlock] = {}
    for section in sections:
        if section.kind == "seed":
            level, relations = _parse_seed(section, system, config)
            if level in seeds:
                raise ProblemFileError(f"duplicate [seed {level}] section", section.line, 1)
            seeds[level] = relations
        elif section.kind == "ideal":
            block = _parse_ideal(section, base)
            if block.name in ideals:
                raise ProblemFileError(f"duplicate [ideal {block.name}] section", section.line, 1)
            ideals[block.name] = block

    return ProblemFile(
        dfield=dfield,
        system=system,
        partial_variable=partial,
        operator_blocks=blocks,
        seeds=seeds,
        ideals=ideals,
        config=config,
        options=options,
    )


def load_problem(path: str) -> ProblemFile:
    """Read and parse a problem file (UTF-8)."""
    with open(path, encoding="utf-8") as handle:
        return parse_problem(handle.read())
