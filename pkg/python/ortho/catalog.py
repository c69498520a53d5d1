"""
Catalogue des groupes de Coxeter sphériques.

Les ordres nommés (A_n, B_n, D_n, E_n, F4, G2, H3, H4) sont lus dans
data/spherical_catalog.tsv ; les symboles de Schläfli en chaîne sont
reconnus directement par spherical_coxeter_order.
"""

import math
from functools import lru_cache
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

import pandas as pd

DEFAULT_DATA_DIR = Path(__file__).resolve().parents[2] / "data"

CATALOG_COLUMNS = ["name", "rank", "order", "provenance"]


@lru_cache(maxsize=4)
def load_spherical_catalog(data_dir: Optional[str] = None) -> pd.DataFrame:
    """
    Charge le catalogue sphérique.

    Args:
        data_dir: Répertoire des données (défaut: data/ du dépôt)

    Returns:
        pd.DataFrame: colonnes name, rank, order, provenance
    """
    path = Path(data_dir) if data_dir else DEFAULT_DATA_DIR
    df = pd.read_csv(path / "spherical_catalog.tsv", sep="\t", dtype={"name": str, "provenance": str})
    missing = [c for c in CATALOG_COLUMNS if c not in df.columns]
    if missing:
        raise ValueError(f"spherical catalog is missing columns {missing}")
    df["rank"] = df["rank"].astype(int)
    df["order"] = df["order"].astype("int64")
    return df


def spherical_names(rank: int, order: int, data_dir: Optional[str] = None) -> List[str]:
    """Noms du catalogue de rang et d'ordre donnés ; I2(m) en rang 2."""
    df = load_spherical_catalog(data_dir)
    names = df[(df["rank"] == rank) & (df["order"] == order)]["name"].tolist()
    if rank == 2 and order % 2 == 0 and order >= 4 and not names:
        names = [f"I2({order // 2})"]
    return names


def _component_order(labels: Tuple[int, ...]) -> Optional[int]:
    k = len(labels) + 1
    labels = tuple(int(x) for x in labels)
    if len(labels) == 1:
        return 2 * labels[0]
    if all(x == 3 for x in labels):
        return math.factorial(k + 1)
    if labels[0] == 4 and all(x == 3 for x in labels[1:]) or labels[-1] == 4 and all(x == 3 for x in labels[:-1]):
        return 2 ** k * math.factorial(k)
    if labels == (3, 4, 3):
        return 1152
    if labels in ((5, 3), (3, 5)):
        return 120
    if labels in ((5, 3, 3), (3, 3, 5)):
        return 14400
    return None


def spherical_coxeter_order(branches: Sequence) -> Optional[int]:
    """
    Ordre du groupe de Coxeter d'un symbole en chaîne, ou None s'il est infini.

    Les branches 2 séparent le diagramme en composantes ; une branche 1
    (générateurs confondus) n'est pas un symbole de Coxeter.
    """
    if any(b == math.inf or b < 2 for b in branches):
        return None
    component: List[int] = []
    pieces: List[Tuple[int, ...]] = []
    for b in branches:
        if b == 2:
            pieces.append(tuple(component))
            component = []
        else:
            component.append(b)
    pieces.append(tuple(component))
    total = 1
    for piece in pieces:
        if not piece:
            total *= 2
            continue
        order = _component_order(piece)
        if order is None:
            return None
        total *= order
    return total
