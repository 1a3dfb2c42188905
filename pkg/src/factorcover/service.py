"""FastAPI service exposing spectra, factor deciders, sweeps and scans."""

from __future__ import annotations

from dataclasses import asdict

from fastapi import FastAPI, HTTPException

from . import __version__, factors, spectra
from .families import FamilyParams, extremal_value, scan_maximizer
from .graphs import Graph6Error, graph6_decode, graph6_encode
from .models import (
    CheckRequest,
    CheckResponse,
    MatchingModel,
    QuotientValue,
    ScanRequest,
    ScanResponse,
    SpectrumRequest,
    SpectrumResponse,
    SpectrumValue,
    StarForestModel,
    SweepRequest,
    SweepResponse,
    WitnessModel,
)
from .families import build_family
from .verify import SweepConfig, run_sweep

app = FastAPI(title="factorcover", version=__version__)


@app.get("/healthz")
def healthz() -> dict:
    return {"status": "ok", "version": __version__}


def _bad_request(exc: Exception) -> HTTPException:
    return HTTPException(status_code=422, detail=str(exc))


@app.post("/spectrum", response_model=SpectrumResponse)
def spectrum(req: SpectrumRequest) -> SpectrumResponse:
    quotient_values: list[QuotientValue] = []
    try:
        if req.graph6 is not None:
            g = graph6_decode(req.graph6)
        else:
            spec = req.family
            assert spec is not None
            params = FamilyParams(spec.n, spec.k, spec.s, spec.family)
            g = build_family(params)
            for kind in ("A", "Q"):
                ev = extremal_value(params, kind)
                quotient_values.append(
                    QuotientValue(kind=kind, value=ev.value, transcribed_value=ev.transcribed_value)
                )
        values = []
        for alpha in req.alphas:
            res = spectra.lambda_alpha(g, alpha)
            values.append(SpectrumValue(alpha=alpha, value=res.value, residual=res.residual, method=res.method))
    except (ValueError, Graph6Error) as exc:
        raise _bad_request(exc)
    return SpectrumResponse(n=g.n, graph6=graph6_encode(g), values=values, quotient=quotient_values)


@app.post("/check", response_model=CheckResponse)
def check(req: CheckRequest) -> CheckResponse:
    try:
        g = graph6_decode(req.graph6)
        if req.property == "matching-cover":
            if req.criterion == "lemma":
                verdict = factors.lemma_matching_criterion(g, req.k)
            else:
                verdict = factors.is_matching_covered(g, req.k)
        else:
            if req.criterion == "lemma":
                verdict = factors.cek_criterion(g, req.k)
            else:
                verdict = factors.is_star_covered(g, req.k)
    except (ValueError, Graph6Error) as exc:
        raise _bad_request(exc)
    certificate = None
    if isinstance(verdict.certificate, factors.Matching):
        certificate = MatchingModel(edges=list(verdict.certificate.edges))
    elif isinstance(verdict.certificate, factors.StarForest):
        certificate = StarForestModel(
            stars=[(c, sorted(leaves)) for c, leaves in verdict.certificate.stars]
        )
    witness = None
    if verdict.witness is not None:
        witness = WitnessModel(
            vertices=sorted(verdict.witness.vertices) if verdict.witness.vertices is not None else None,
            edge=verdict.witness.edge,
            detail=verdict.witness.detail,
        )
    return CheckResponse(holds=verdict.holds, certificate=certificate, witness=witness)


@app.post("/sweep", response_model=SweepResponse)
def sweep(req: SweepRequest) -> SweepResponse:
    try:
        config = SweepConfig(
            target=req.target,
            n=req.n,
            k=req.k,
            mode=req.mode,
            sample_count=req.sample_count,
            rng_seed=req.rng_seed,
            tolerance=req.tolerance,
            n_max=req.n_max,
            k_set=tuple(req.k_set) if req.k_set is not None else None,
            trials=req.trials,
        )
        report = run_sweep(config)
    except ValueError as exc:
        raise _bad_request(exc)
    return SweepResponse(**report.to_dict())


@app.post("/scan", response_model=ScanResponse)
def scan(req: ScanRequest) -> ScanResponse:
    try:
        report = scan_maximizer(req.which, req.n, req.k)
    except ValueError as exc:
        raise _bad_request(exc)
    data = asdict(report)
    data["s_values"] = list(data["s_values"])
    data["values"] = list(data["values"])
    return ScanResponse(**data)
