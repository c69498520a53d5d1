"""
Cartes régulières de rang 3 : invariants, dual de Petrie et
identification dans le catalogue data/map_catalog.tsv.
"""

from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

import pandas as pd

from core.config import EngineConfig
from core.exceptions import NotPolyhedral
from fp import FpMatrix
from matgroup import matrix_order

from .cgroup import is_string_cgroup
from .engine import engine_or_default, group_of

DEFAULT_DATA_DIR = Path(__file__).resolve().parents[2] / "data"

MAP_CATALOG_COLUMNS = ["name", "k", "l", "order", "petrie", "genus", "provenance"]


@dataclass(frozen=True)
class MapInvariants:
    """
    Invariants d'une carte régulière de type {k, l}.

    genus est le genre orientable (V - E + F = 2 - 2g) si la carte est
    orientable, le genre non orientable (V - E + F = 2 - g) sinon.
    """
    type: Tuple[int, int]
    order: int
    petrie: int
    V: int
    E: int
    F: int
    genus: int
    orientable: bool

    @property
    def euler(self) -> int:
        return self.V - self.E + self.F

    @property
    def genus_text(self) -> str:
        return str(self.genus) if self.orientable else f"N{self.genus}"

    def to_dict(self) -> dict:
        return {
            "type": list(self.type),
            "order": self.order,
            "petrie": self.petrie,
            "V": self.V,
            "E": self.E,
            "F": self.F,
            "genus": self.genus,
            "orientable": self.orientable,
        }


def _check_rank3(gens: Sequence[FpMatrix]):
    if len(gens) != 3:
        raise ValueError(f"a map needs exactly 3 generators, got {len(gens)}")


def map_invariants(gens: Sequence[FpMatrix], engine: Optional[EngineConfig] = None) -> MapInvariants:
    """
    V, E, F par indices de sous-groupes, longueur de Petrie = ordre de r0r1r2,
    orientabilité par l'indice 2 du sous-groupe des rotations.

    Raises:
        NotPolyhedral: si ⟨gens⟩ n'est pas un C-groupe
    """
    _check_rank3(gens)
    engine = engine_or_default(engine)
    report = is_string_cgroup(gens, engine)
    if not report.is_cgroup:
        raise NotPolyhedral("rank 3 generators fail the intersection property",
                            context={"intersection_order": report.intersection_order})
    r0, r1, r2 = gens
    n, p = r0.n, r0.p
    order = group_of(gens, engine).order()
    vertex_stab = group_of([r1, r2], engine).order()
    edge_stab = group_of([r0, r2], engine).order()
    face_stab = group_of([r0, r1], engine).order()
    V, E, F = order // vertex_stab, order // edge_stab, order // face_stab
    rotations = group_of([r0 @ r1, r1 @ r2], engine, n=n, p=p).order()
    orientable = 2 * rotations == order
    chi = V - E + F
    genus = (2 - chi) // 2 if orientable else 2 - chi
    limit = engine.max_matrix_order
    return MapInvariants(
        type=(matrix_order(r0 @ r1, limit), matrix_order(r1 @ r2, limit)),
        order=order,
        petrie=matrix_order(r0 @ r1 @ r2, limit),
        V=V, E=E, F=F,
        genus=genus,
        orientable=orientable)


def petrial(gens: Sequence[FpMatrix]) -> List[FpMatrix]:
    """Dual de Petrie : (s0, s1, s2) ↦ (s0·s2, s1, s2) ; involutif."""
    _check_rank3(gens)
    s0, s1, s2 = gens
    return [s0 @ s2, s1, s2]


@lru_cache(maxsize=4)
def load_map_catalog(data_dir: Optional[str] = None) -> pd.DataFrame:
    """Charge le catalogue de cartes (petrie '-' = joker)."""
    path = Path(data_dir) if data_dir else DEFAULT_DATA_DIR
    df = pd.read_csv(path / "map_catalog.tsv", sep="\t", dtype=str)
    missing = [c for c in MAP_CATALOG_COLUMNS if c not in df.columns]
    if missing:
        raise ValueError(f"map catalog is missing columns {missing}")
    return df


def identify_map(invariants: MapInvariants, data_dir: Optional[str] = None) -> Optional[str]:
    """Nom du catalogue pour (type, ordre, Petrie, genre), ou None."""
    df = load_map_catalog(data_dir)
    k, l = invariants.type
    rows = df[(df["k"] == str(k)) & (df["l"] == str(l)) & (df["order"] == str(invariants.order))
              & (df["genus"] == invariants.genus_text)]
    rows = rows[(rows["petrie"] == "-") | (rows["petrie"] == str(invariants.petrie))]
    if rows.empty:
        return None
    return rows.iloc[0]["name"]


def map_label(invariants: MapInvariants, data_dir: Optional[str] = None) -> str:
    """Nom de catalogue, ou description générique {k,l} d'ordre donné."""
    name = identify_map(invariants, data_dir)
    if name:
        return name
    k, l = invariants.type
    return f"{{{k},{l}}}_{invariants.petrie}#{invariants.order}"
