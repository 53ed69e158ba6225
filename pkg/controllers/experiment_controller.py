from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

from loguru import logger

from core.complex_loader import ComplexLoader, write_json
from core.config_loader import ConfigLoader
from core.defcone import assemble_wall_system, deformation_dims, hypersimplex_system, support_vector
from core.exactla import parse_decimal
from core.exceptions import ValidationError
from core.fan import bier_fan, coarsen_to_diplo, ridge_pairs
from core.named_polytopes import hypersimplex
from core.scomplex import bier_sphere, label_name
from core.threshold import is_threshold
from core.verification import (FAIL, PASS, default_x, facial_structure_check, minkowski_check,
                               polar_identification, verify_polytopality)
from core.vertex_loader import VertexLoader

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_ERROR = 2


@dataclass
class CommandResult:
    """JSON payload for stdout, human summary lines for stderr, and the exit code."""

    payload: Dict[str, Any]
    summary: List[str] = field(default_factory=list)
    exit_code: int = EXIT_OK


def parse_int_pair(text: str, what: str) -> tuple:
    try:
        a, b = (int(part) for part in text.split(","))
    except ValueError:
        raise ValidationError(f"{what} expects two comma-separated integers, got {text!r}", text)
    return a, b


def parse_rational_list(text: str) -> List:
    return [parse_decimal(part) for part in text.split(",") if part.strip()]


class ExperimentController:
    """
    Orchestrates one experiment per CLI subcommand by coordinating the
    loaders and the core modules.
    """

    def __init__(self, config: Optional[ConfigLoader] = None):
        self.config = config or ConfigLoader()
        self.threads = self.config.threads
        self.complex_loader = ComplexLoader()
        logger.debug(f"ExperimentController ready with {self.threads} worker(s)")

    def _save(self, out: Optional[str], payload: Dict) -> None:
        if out:
            write_json(out, payload)

    def run_bier(self, complex_ref: str, out: Optional[str] = None) -> CommandResult:
        K = self.complex_loader.load_complex(complex_ref)
        logger.info(f"Building Bier sphere of {K}")
        sphere = bier_sphere(K)
        sphere.check_sphere()
        payload = sphere.to_dict()
        self._save(out, payload)
        summary = [f"Bier sphere on n={sphere.n}: {len(sphere.facets)} facets, "
                   f"{len(sphere.edges())} edges, {len(sphere.vertices())} vertices"]
        summary.append("First facet: {" + ", ".join(label_name(v) for v in payload["facets"][0]) + "}")
        logger.success(summary[0])
        return CommandResult(payload=payload, summary=summary)

    def run_verify(self, vertices_path: str, complex_ref: str, round_digits: Optional[int] = None,
                   hull_out: Optional[str] = None) -> CommandResult:
        points = VertexLoader(round_digits).load(vertices_path)
        sphere = bier_sphere(self.complex_loader.load_complex(complex_ref))
        report = verify_polytopality(points, sphere, threads=self.threads,
                                     chunk_size=self.config.get("hull_chunk_size"))
        payload = report.to_dict()
        if hull_out and report.hull is not None:
            write_json(hull_out, report.hull.to_dict())
        summary = [f"Polytopality: {report.verdict} ({report.reason})"]
        if report.method:
            summary.append(f"Labeling found by {report.method} matching")
        return CommandResult(payload=payload, summary=summary,
                             exit_code=EXIT_OK if report.passed else EXIT_FAIL)

    def run_defcone(self, hypersimplex_arg: Optional[str] = None, complex_ref: Optional[str] = None,
                    coarsen: Optional[str] = None, out: Optional[str] = None,
                    include_rows: bool = False) -> CommandResult:
        if (hypersimplex_arg is None) == (complex_ref is None):
            raise ValidationError("defcone needs exactly one of --hypersimplex and --complex")
        if hypersimplex_arg is not None:
            n, k = parse_int_pair(hypersimplex_arg, "--hypersimplex")
            setup = hypersimplex_system(n, k, threads=self.threads)
            fan, system, support, lineality = setup.fan, setup.system, setup.support, setup.lineality
        elif self.complex_loader.is_fan_file(complex_ref):
            fan_input = self.complex_loader.load_fan(complex_ref)
            fan = fan_input.fan
            coarsening = coarsen_to_diplo(fan) if coarsen == "diplo" else None
            system = assemble_wall_system(fan, coarsening, threads=self.threads)
            support = support_vector(fan_input.points, fan) if fan_input.points else None
            lineality = fan_input.lineality if fan_input.lineality is not None else fan.dim
        else:
            K = self.complex_loader.load_complex(complex_ref)
            fan = bier_fan(K)
            coarsening = coarsen_to_diplo(fan) if coarsen == "diplo" else None
            system = assemble_wall_system(fan, coarsening, threads=self.threads)
            support = None
            if coarsening is not None:
                support = support_vector(hypersimplex(K.n, K.n // 2).recentered().points, fan)
            lineality = fan.dim

        overlaps = fan.spot_check_disjointness(samples=self.config.get("disjointness_samples"),
                                               seed=self.config.get("sample_seed"))
        report = deformation_dims(system, lineality, support)
        payload = report.to_dict(include_rows=include_rows)
        payload["fan"] = {"cones": len(fan.maxcones), "ridges": len(ridge_pairs(fan)),
                          "overlapping_pairs": [list(p) for p in overlaps]}
        self._save(out, payload)
        summary = [f"Deformation cone: D={report.lin_dim}, lineality={report.lineality}, "
                   f"essential={report.essential_dim} -> {report.verdict}",
                   f"Justification: {report.justification}"]
        return CommandResult(payload=payload, summary=summary)

    def run_threshold(self, complex_ref: str, out: Optional[str] = None) -> CommandResult:
        K = self.complex_loader.load_complex(complex_ref)
        result = is_threshold(K)
        payload = result.to_dict()
        if result.is_threshold:
            verified = result.verify(K)
            payload["verified"] = verified
            summary = [f"Threshold complex: nu={result.threshold}, margin={result.margin}, "
                       f"re-check {'passed' if verified else 'FAILED'}"]
        else:
            summary = [f"Not a threshold complex: optimal margin {result.optimum}"]
        self._save(out, payload)
        return CommandResult(payload=payload, summary=summary)

    def run_minkowski_check(self, size: int, x: Optional[str] = None) -> CommandResult:
        if size < 2:
            raise ValidationError(f"--n must be at least 2, got {size}", size)
        xs: Sequence = parse_rational_list(x) if x else default_x(size)
        if len(xs) != size:
            raise ValidationError(f"--x has {len(xs)} entries, --n asks for {size}", x)
        report = minkowski_check(xs, threads=self.threads)
        summary = [f"Minkowski decomposition: {report.verdict} "
                   f"({report.lhs_vertices} vs {report.rhs_vertices} vertices)"]
        return CommandResult(payload=report.to_dict(), summary=summary,
                             exit_code=EXIT_OK if report.verdict == PASS else EXIT_FAIL)

    def run_facial(self, n: int) -> CommandResult:
        if n < 2:
            raise ValidationError(f"--n must be at least 2, got {n}", n)
        facial = facial_structure_check(n, threads=self.threads)
        polar = polar_identification(n, threads=self.threads)
        payload = {"facial": facial.to_dict(), "polar": polar.to_dict()}
        failed = FAIL in (facial.verdict, polar.verdict)
        summary = [f"Face lattice of Omega_{n}: {facial.verdict} ({facial.computed} proper faces)",
                   f"Polar dual: {polar.polar_vertices} vertices, identification {polar.verdict}"]
        return CommandResult(payload=payload, summary=summary,
                             exit_code=EXIT_FAIL if failed else EXIT_OK)
