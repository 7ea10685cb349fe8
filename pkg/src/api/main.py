"""FastAPI backend for minorforge: analyses and verifiers over HTTP."""

import logging
from typing import Any, Dict, Optional

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, Field

from src.configurations.checkers import explain_certificate
from src.graph.minors import explain_minor_model, find_k6_minor
from src.planarity.apex import is_apex
from src.planarity.embedding import is_planar
from src.society.depth import depth_exact
from src.society.rural import is_rural
from src.utils import config
from src.utils.audit_logger import fingerprint, get_audit_trail_stats, log_verification
from src.utils.budget import Budget
from src.utils.errors import BudgetExceeded, MalformedInputError, MinorforgeError, TooLarge
from src.utils.serialization import CertificateModel, GraphModel, MinorModelModel, SocietyModel

# Set up logging
logging.basicConfig(level=config.LOG_LEVEL, format=config.LOG_FORMAT)
logger = logging.getLogger(__name__)

# Initialize FastAPI app
app = FastAPI(
    title="minorforge API",
    description="Planarity, apex and K6-minor analyses, society metrics and certificate verification",
    version="1.0.0",
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


class GraphRequest(BaseModel):
    graph: GraphModel = Field(..., description="Host graph")
    budget: Optional[int] = Field(None, description="Search node limit", gt=0)


class SocietyRequest(BaseModel):
    society: SocietyModel = Field(..., description="Host society")
    budget: Optional[int] = Field(None, description="Search node limit", gt=0)
    limit: Optional[int] = Field(None, description="Largest society accepted by exact depth", gt=0)


class ModelRequest(BaseModel):
    graph: GraphModel = Field(..., description="Host graph")
    model: MinorModelModel = Field(..., description="Claimed K6 minor model")


class CertificateRequest(BaseModel):
    society: SocietyModel = Field(..., description="Host society")
    certificate: CertificateModel = Field(..., description="Claimed certificate")


class Verdict(BaseModel):
    """Result of a verifier call."""

    valid: bool = Field(..., description="Whether the witness verifies")
    violated: Optional[str] = Field(None, description="First violated clause when invalid")
    fingerprint: str = Field(..., description="Short hash of the verified input")


def _fail(where: str, e: Exception) -> HTTPException:
    """Map library errors to HTTP status codes."""
    if isinstance(e, MalformedInputError):
        return HTTPException(status_code=400, detail=f"{where}: {e}")
    if isinstance(e, (BudgetExceeded, TooLarge)):
        return HTTPException(status_code=422, detail=f"{where}: {e}")
    logger.error(f"Error in {where}: {e}")
    return HTTPException(status_code=500, detail=f"{where}: {e}. Check server logs for details.")


@app.get("/")
async def root() -> Dict[str, str]:
    """Root endpoint for health check."""
    return {"status": "healthy", "service": "minorforge API"}


@app.get("/health")
async def health() -> Dict[str, Any]:
    """Health check endpoint with audit-trail counts."""
    return {"status": "healthy", "audit": get_audit_trail_stats() if config.AUDIT_ENABLED else None}


@app.post("/analyze/planar")
def analyze_planar(request: GraphRequest) -> Dict[str, Any]:
    try:
        return {"planar": is_planar(request.graph.to_graph())}
    except MinorforgeError as e:
        raise _fail("analyze/planar", e)


@app.post("/analyze/apex")
def analyze_apex(request: GraphRequest) -> Dict[str, Any]:
    try:
        apex, witness = is_apex(request.graph.to_graph())
        return {"apex": apex, "witness": witness}
    except MinorforgeError as e:
        raise _fail("analyze/apex", e)


@app.post("/analyze/k6")
def analyze_k6(request: GraphRequest) -> Dict[str, Any]:
    """Exact K6-minor search; the model, when found, is already verified."""
    budget = Budget(request.budget, where="api analyze/k6")
    try:
        model = find_k6_minor(request.graph.to_graph(), budget)
    except MinorforgeError as e:
        raise _fail("analyze/k6", e)
    log_verification("find_k6_minor", model is not None, request.graph.model_dump(), budget=budget.to_dict())
    return {"k6_minor": model is not None, "model": model.to_dict() if model else None, "spent": budget.spent}


@app.post("/society/rural")
def society_rural(request: SocietyRequest) -> Dict[str, Any]:
    try:
        return {"rural": is_rural(request.society.to_society())}
    except MinorforgeError as e:
        raise _fail("society/rural", e)


@app.post("/society/depth")
def society_depth(request: SocietyRequest) -> Dict[str, Any]:
    budget = Budget(request.budget, where="api society/depth")
    try:
        depth, ld = depth_exact(request.society.to_society(), limit=request.limit, budget=budget)
    except MinorforgeError as e:
        raise _fail("society/depth", e)
    return {"depth": depth, "decomposition": ld.to_dict(), "spent": budget.spent}


@app.post("/verify/model", response_model=Verdict)
def verify_model(request: ModelRequest) -> Verdict:
    payload = request.model_dump()
    try:
        reason = explain_minor_model(request.graph.to_graph(), request.model.to_model())
    except MinorforgeError as e:
        raise _fail("verify/model", e)
    log_verification("verify_minor_model", reason is None, payload, reason)
    return Verdict(valid=reason is None, violated=reason, fingerprint=fingerprint(payload))


@app.post("/verify/certificate", response_model=Verdict)
def verify_certificate(request: CertificateRequest) -> Verdict:
    payload = request.model_dump()
    try:
        reason = explain_certificate(request.society.to_society(), request.certificate.to_certificate())
    except MinorforgeError as e:
        raise _fail("verify/certificate", e)
    log_verification(f"verify_certificate[{request.certificate.kind}]", reason is None, payload, reason)
    return Verdict(valid=reason is None, violated=reason, fingerprint=fingerprint(payload))


if __name__ == "__main__":
    import uvicorn

    uvicorn.run(app, host=config.API_HOST, port=config.API_PORT)
