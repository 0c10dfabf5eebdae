from typing import Dict, List, Optional
from datetime import datetime
from pathlib import Path
import uuid

from loguru import logger
from pydantic import BaseModel, Field, ValidationError


class CompletionCertificate(BaseModel):
    """Record asserting that one base was searched with the stated parameters."""
    certificate_id: str = Field(default_factory=lambda: str(uuid.uuid4()))
    timestamp: str = Field(default_factory=lambda: datetime.now().isoformat())
    g: int
    threshold: int
    n3_cap: int
    phases: List[str]
    solutions: int
    wall_time: float

    def matches(self, threshold: int, n3_cap: int, phases: List[str]) -> bool:
        """True when this certificate covers a run with the given parameters."""
        return (
            self.threshold == threshold
            and self.n3_cap == n3_cap
            and sorted(self.phases) == sorted(phases)
        )


def certificate_path_for(out_path: str) -> str:
    return out_path + ".certs.jsonl"


class CertificateStore:
    """Append-only JSON-lines store of per-base completion certificates."""

    def __init__(self, path: str):
        self.path = Path(path)
        self._by_base: Dict[int, CompletionCertificate] = {}
        self._loaded = False

    def initialize(self) -> None:
        """Load existing certificates; the latest record per base wins."""
        self._by_base = {}
        if self.path.exists():
            with self.path.open("r", encoding="utf-8") as stream:
                for line_no, raw_line in enumerate(stream, start=1):
                    line = raw_line.strip()
                    if not line:
                        continue
                    try:
                        cert = CompletionCertificate.model_validate_json(line)
                    except ValidationError as e:
                        logger.warning(f"Skipping malformed certificate at {self.path}:{line_no}: {e}")
                        continue
                    self._by_base[cert.g] = cert
            logger.info(f"Loaded {len(self._by_base)} certificates from {self.path}")
        self._loaded = True

    def _ensure_loaded(self) -> None:
        if not self._loaded:
            self.initialize()

    def store_certificate(self, cert: CompletionCertificate) -> str:
        """Append a certificate and return its id."""
        self._ensure_loaded()
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.path.open("a", encoding="utf-8") as stream:
            stream.write(cert.model_dump_json() + "\n")
        self._by_base[cert.g] = cert
        logger.info(f"Certified g={cert.g} ({cert.solutions} triples, {cert.wall_time:.2f}s)")
        return cert.certificate_id

    def retrieve_certificate(self, g: int) -> Optional[CompletionCertificate]:
        self._ensure_loaded()
        return self._by_base.get(g)

    def is_complete(self, g: int, threshold: int, n3_cap: int, phases: List[str]) -> bool:
        cert = self.retrieve_certificate(g)
        return cert is not None and cert.matches(threshold, n3_cap, phases)

    def completed_bases(self) -> List[int]:
        self._ensure_loaded()
        return sorted(self._by_base)
