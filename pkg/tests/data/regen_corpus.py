"""Rebuild the generated part of tests/data/corpus.

Hand-written instances (hand_*.hg) are not touched. Run from the repo root:
    python tests/data/regen_corpus.py
"""

from pathlib import Path

from strongcolor import generators, io

HERE = Path(__file__).parent / "corpus"


def main():
    named = {
        "complete_3_2": generators.gen_complete_uniform(3, 2),
        "complete_4_3": generators.gen_complete_uniform(4, 3),
        "complete_5_4": generators.gen_complete_uniform(5, 4),
        "complete_6_4": generators.gen_complete_uniform(6, 4),
        "sunflower_2_3_1": generators.gen_sunflower(2, 3, 1),
        "sunflower_3_2_2": generators.gen_sunflower(3, 2, 2),
        "sunflower_2_5_3": generators.gen_sunflower(2, 5, 3),
        "apex_clique_2": generators.gen_apex_clique(2),
        "apex_clique_3": generators.gen_apex_clique(3),
        "apex_clique_4": generators.gen_apex_clique(4),
    }
    for name, H in named.items():
        io.write_hypergraph(HERE / f"{name}.hg", H)
    golden = generators.gen_random_2_intersecting(10, 8, 5, 7, seed=1)
    io.write_hypergraph(
        HERE / "random_2int_10_8_5_7_seed1.hg",
        golden,
        ["family: random_2_intersecting 10 8 5 7", "seed: 1", f"prng: {generators.PRNG_ID}"],
    )
    for target in generators.TARGETS:
        H = generators.find_branch_witness(target, seed=0)
        if H is not None:
            io.write_hypergraph(
                HERE / f"witness_{target}.hg",
                H,
                [f"witness: {target}", "seed: 0", f"prng: {generators.PRNG_ID}"],
            )


if __name__ == "__main__":
    main()
