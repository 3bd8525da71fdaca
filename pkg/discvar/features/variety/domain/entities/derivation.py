"""State of one run of the relation-ideal pipeline"""
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from discvar.features.groebner.domain.entities import BasisStats, PolySystem
from discvar.features.symform.service import DiscriminantDegrees
from discvar.features.variety.constants import (
    STATED_M0EQS_COUNT,
    STATED_RELS_PROFILE,
    STATED_SIMPLIFIED_COUNT,
    DerivationStatus,
)
from discvar.features.variety.domain.schemas import AbortInfo, CheckResult


@dataclass
class Derivation:
    """
    Rels, its simplification RelsS and the trace-zero restriction M0eqs.

    Systems stay None after an abort. Checks are appended by
    verify_derivation and recomputed on every run.
    """

    n: int
    parametrization: str
    status: DerivationStatus = DerivationStatus.COMPLETE
    rels: Optional[PolySystem] = None
    rels_s: Optional[PolySystem] = None
    m0eqs: Optional[PolySystem] = None
    checks: List[CheckResult] = field(default_factory=list)
    timings: Dict[str, float] = field(default_factory=dict)
    stats: Optional[BasisStats] = None
    abort: Optional[AbortInfo] = None
    degrees: Optional[DiscriminantDegrees] = None

    @property
    def passed(self) -> bool:
        return self.status == DerivationStatus.COMPLETE and all(c.passed for c in self.checks)

    def failed_checks(self) -> List[str]:
        return [c.name for c in self.checks if not c.passed]

    def rels_degree_profile(self) -> Dict[int, int]:
        """Number of Rels members per total degree"""
        if self.rels is None:
            return {}
        return dict(sorted(Counter(self.rels.degrees()).items()))

    @property
    def simplified_count(self) -> Optional[int]:
        return None if self.rels_s is None else len(self.rels_s)

    @property
    def count_discrepancy(self) -> bool:
        """For n = 3: the simplified system does not have the announced four members"""
        return self.n == 3 and self.rels_s is not None and len(self.rels_s) != STATED_SIMPLIFIED_COUNT

    def discrepancies(self) -> List[str]:
        """For n = 3: where the computed systems differ from what the reference listings announce"""
        if self.n != 3:
            return []
        notes = []
        if self.rels is not None and self.rels_degree_profile() != STATED_RELS_PROFILE:
            notes.append(f"Rels degree profile {self.rels_degree_profile()}, announced {STATED_RELS_PROFILE}")
        if self.count_discrepancy:
            notes.append(f"RelsS has {len(self.rels_s)} members, announced {STATED_SIMPLIFIED_COUNT}")
        if self.m0eqs is not None and len(self.m0eqs) != STATED_M0EQS_COUNT:
            notes.append(f"M0eqs has {len(self.m0eqs)} members, printed {STATED_M0EQS_COUNT}")
        return notes
