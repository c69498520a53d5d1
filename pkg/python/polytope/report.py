"""
Rapport combinatoire d'un polytope régulier de groupe ⟨r_0, ..., r_{n-1}⟩.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence

from coxeter import CartanMatrix
from core.config import EngineConfig
from fp import FpMatrix

from .cgroup import face_counts, schlafli_realized
from .duality import DualityVerdict, self_dual
from .engine import engine_or_default
from .maps import MapInvariants, identify_map, map_invariants


@dataclass
class PolytopeReport:
    """
    Symbole réalisé, nombres de faces, longueurs de Petrie des sections de
    rang 3 (facettes d'abord), auto-dualité et cartes des facettes et
    figures de sommet. En rang 3, la carte elle-même est la « facette ».
    """
    schlafli_realized: List[int]
    face_counts: List[int]
    petrie: List[int]
    self_dual: DualityVerdict
    facet_invariants: Optional[MapInvariants] = None
    vertexfig_invariants: Optional[MapInvariants] = None
    facet_id: Optional[str] = None
    vfig_id: Optional[str] = None

    def to_dict(self) -> dict:
        return {
            "schlafli_realized": self.schlafli_realized,
            "face_counts": self.face_counts,
            "petrie": self.petrie,
            "self_dual": self.self_dual.to_dict(),
            "facet_invariants": self.facet_invariants.to_dict() if self.facet_invariants else None,
            "vertexfig_invariants": self.vertexfig_invariants.to_dict() if self.vertexfig_invariants else None,
            "facet_id": self.facet_id,
            "vfig_id": self.vfig_id,
        }


def polytope_report(gens: Sequence[FpMatrix], cartan_matrix: Optional[CartanMatrix] = None,
                    engine: Optional[EngineConfig] = None, data_dir: Optional[str] = None) -> PolytopeReport:
    """
    Combinatoire d'un C-groupe déjà vérifié.

    Args:
        gens: Réflexions
        cartan_matrix: Pour le chemin rapide de l'auto-dualité
        engine: Seuils du moteur
        data_dir: Répertoire du catalogue de cartes
    """
    engine = engine_or_default(engine)
    n = len(gens)
    sections = [map_invariants(gens[i:i + 3], engine) for i in range(n - 2)]
    facet = sections[0] if sections else None
    vfig = sections[-1] if n >= 4 else None
    return PolytopeReport(
        schlafli_realized=schlafli_realized(gens, engine.max_matrix_order),
        face_counts=face_counts(gens, engine),
        petrie=[s.petrie for s in sections],
        self_dual=self_dual(gens, cartan_matrix, engine),
        facet_invariants=facet,
        vertexfig_invariants=vfig,
        facet_id=identify_map(facet, data_dir) if facet else None,
        vfig_id=identify_map(vfig, data_dir) if vfig else None)
