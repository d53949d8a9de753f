#!/usr/bin/env python3
"""Script de génération d'éventails aléatoires réguliers pour le corpus."""

import argparse
import random
import sys
from itertools import product
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

# Ajouter le répertoire parent au path pour importer le paquet src
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.core.fans import star_subdivision, validate_fan
from src.models.fan import Fan, FanData
from src.storage.interface import FanCorpusInterface
from src.storage.json_storage import JSONFanCorpus

MAX_SUBDIVISIONS = 2


def _unit(n: int, i: int, sign: int = 1) -> List[int]:
    v = [0] * n
    v[i] = sign
    return v


def product_of_lines(k: int) -> FanData:
    """Fan of (P^1)^k: rays ±e_i, one maximal cone per sign pattern."""
    rays = [_unit(k, i) for i in range(k)] + [_unit(k, i, -1) for i in range(k)]
    cones = [[i + k * s for i, s in enumerate(signs)] for signs in product((0, 1), repeat=k)]
    return FanData(k, rays, cones, f"product_of_lines_{k}")


def projective_plane() -> FanData:
    return FanData(2, [[1, 0], [0, 1], [-1, -1]], [[0, 1], [1, 2], [0, 2]], "projective_plane")


def subfan(base: FanData, cones: Sequence[Sequence[int]], name: str) -> FanData:
    """Keep the given maximal cones and only the rays they use."""
    used = sorted({i for cone in cones for i in cone})
    index = {old: new for new, old in enumerate(used)}
    return FanData(base.dim, [base.rays[i] for i in used],
                   [[index[i] for i in cone] for cone in cones], name)


def random_fan(rng: random.Random, max_rank: int = 3, subdivisions: Optional[int] = None) -> Fan:
    """Valid regular fan: a random subfan of (P^1)^k or P^2, then random star subdivisions.

    Args:
        rng: Seeded random source
        max_rank: Largest ambient rank
        subdivisions: Number of star subdivisions (default: random, at most MAX_SUBDIVISIONS)
    """
    k = rng.randint(1, max_rank)
    base = projective_plane() if k == 2 and rng.random() < 0.3 else product_of_lines(k)
    count = rng.randint(1, len(base.cones))
    chosen = rng.sample(base.cones, count)
    fan = validate_fan(subfan(base, chosen, f"random_{base.name}_{count}"))

    if subdivisions is None:
        subdivisions = rng.randint(0, MAX_SUBDIVISIONS)
    for _ in range(subdivisions):
        candidates = [c for c in fan.all_cones if len(c) >= 2]
        if not candidates:
            break
        fan = star_subdivision(fan, rng.choice(candidates))
    return fan


def fill_corpus(corpus: FanCorpusInterface, count: int, max_rank: int, seed: int,
                replace: bool = False) -> Tuple[int, int]:
    """Add count random fans named random_<seed>_<i>.

    Existing records with the same name are deleted first when replace is
    set, and counted as errors otherwise.

    Returns:
        (fans added, errors)
    """
    rng = random.Random(seed)
    existing = set(corpus.names())
    success_count = 0
    error_count = 0
    for i in range(1, count + 1):
        fan = random_fan(rng, max_rank)
        name = f"random_{seed}_{i}"
        if name in existing:
            if not replace:
                print(f"[{i}/{count}] ✗ {name} existe déjà")
                error_count += 1
                continue
            corpus.delete_fan(name)
            print(f"[{i}/{count}] ↻ {name} remplacé")
        record = fan.to_dict()
        record['name'] = name
        record['tags'] = ['random', f"rank{fan.n}"]
        record['description'] = f"{len(fan.rays)} rays, {len(fan.max_cones)} maximal cones"
        try:
            corpus.add_fan(record)
        except (ValueError, IOError) as e:
            print(f"[{i}/{count}] ✗ {name}: {e}")
            error_count += 1
            continue
        print(f"[{i}/{count}] ✓ {name}: {record['description']}")
        success_count += 1
    return success_count, error_count


def main():
    """Point d'entrée principal."""
    parser = argparse.ArgumentParser(
        description='Génère des éventails réguliers aléatoires et les ajoute à un corpus JSON'
    )
    parser.add_argument(
        'output',
        type=str,
        help='Fichier corpus de sortie (créé s\'il n\'existe pas)'
    )
    parser.add_argument(
        '--count',
        type=int,
        default=10,
        help='Nombre d\'éventails à générer (défaut: 10)'
    )
    parser.add_argument(
        '--max-rank',
        type=int,
        default=3,
        help='Rang ambiant maximal (défaut: 3)'
    )
    parser.add_argument(
        '--seed',
        type=int,
        default=0,
        help='Graine du générateur aléatoire (défaut: 0)'
    )
    parser.add_argument(
        '--replace',
        action='store_true',
        help='Remplacer les éventails de même nom déjà présents dans le corpus'
    )

    args = parser.parse_args()

    if args.count < 1:
        print(f"Erreur: --count doit être positif, reçu {args.count}.", file=sys.stderr)
        sys.exit(1)
    if args.max_rank < 1:
        print(f"Erreur: --max-rank doit être positif, reçu {args.max_rank}.", file=sys.stderr)
        sys.exit(1)

    corpus = JSONFanCorpus(args.output)

    print(f"Génération de {args.count} éventail(s) dans '{args.output}'")
    print(f"Paramètres: rang max={args.max_rank}, graine={args.seed}")
    print("-" * 60)

    success_count, error_count = fill_corpus(corpus, args.count, args.max_rank, args.seed, args.replace)

    # Résumé
    print("-" * 60)
    print(f"Terminé: {success_count} ajouté(s), {error_count} erreur(s)")


if __name__ == '__main__':
    main()
