"""
Opération de mélange : remplacer les générateurs par des mots en eux.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Union

from core.config import EngineConfig
from core.exceptions import NotInvolution
from fp import FpMatrix
from matgroup import Word, evaluate_word, parse_word

from .cgroup import schlafli_realized
from .engine import engine_or_default, group_of

# recettes nommées, un mot par nouveau générateur
RECIPES = {
    "dual": ("3", "2", "1", "0"),
    "stellate_faces": ("0", "101", "2", "3"),
    "great": ("1", "0", "21012", "3"),
    "square_facets": ("1", "0", "212", "3"),
}


@dataclass
class MixingResult:
    """Nouveaux générateurs, ordre engendré et indice dans le groupe d'origine."""
    recipe: List[str]
    generators: List[FpMatrix]
    order: int
    parent_order: int
    schlafli: List[int]

    @property
    def index(self) -> int:
        return self.parent_order // self.order

    def to_dict(self) -> dict:
        return {
            "recipe": self.recipe,
            "order": self.order,
            "parent_order": self.parent_order,
            "index": self.index,
            "schlafli": self.schlafli,
        }


def resolve_recipe(recipe: Union[str, Sequence[Union[str, Word]]]) -> List[Word]:
    """Recette nommée, texte "0,101,2,3" ou liste de mots."""
    if isinstance(recipe, str):
        if recipe in RECIPES:
            recipe = RECIPES[recipe]
        else:
            recipe = [part for part in recipe.split(",")]
    return [w if isinstance(w, Word) else parse_word(w.strip()) for w in recipe]


def mixing(gens: Sequence[FpMatrix], recipe: Union[str, Sequence[Union[str, Word]]],
           engine: Optional[EngineConfig] = None) -> MixingResult:
    """
    Applique une recette de mélange.

    Raises:
        NotInvolution: si un mot n'évalue pas en une involution
    """
    engine = engine_or_default(engine)
    words = resolve_recipe(recipe)
    new_gens = []
    for word in words:
        g = evaluate_word(gens, word)
        if g.is_identity() or not (g @ g).is_identity():
            raise NotInvolution(f"word {word} does not evaluate to an involution", word=str(word))
        new_gens.append(g)
    parent = group_of(gens, engine).order()
    order = group_of(new_gens, engine).order()
    return MixingResult(
        recipe=[str(w) for w in words],
        generators=new_gens,
        order=order,
        parent_order=parent,
        schlafli=schlafli_realized(new_gens, engine.max_matrix_order))
