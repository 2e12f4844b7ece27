import pytest

from nonincidence import (
    bose,
    brute_force_oracle,
    build_sts,
    doubling,
    embed_subsystem,
    exact_max_nonincident,
    greedy_max_nonincident,
    nonincidence_upper_bound,
    verify_certificate,
)


class TestExactSearch:
    def test_fano(self, fano):
        rep = exact_max_nonincident(fano)
        assert rep.best_s == 2
        assert rep.exact
        assert verify_certificate(fano, rep.certificate, require_square=True)

    def test_ag23(self, ag23):
        rep = exact_max_nonincident(ag23)
        assert rep.best_s == 3
        assert rep.exact

    def test_sts13_below_ceiling(self):
        d = build_sts(13, seed=11)
        rep = exact_max_nonincident(d)
        assert rep.exact
        assert rep.best_s <= nonincidence_upper_bound(13) == 6
        assert rep.best_s == brute_force_oracle(d)

    @pytest.mark.parametrize("seed", range(4))
    def test_agrees_with_oracle_on_sts15(self, seed):
        d = embed_subsystem(3, 15, seed=seed).design
        rep = exact_max_nonincident(d)
        assert rep.exact
        assert rep.best_s == brute_force_oracle(d)
        assert verify_certificate(d, rep.certificate, require_square=True)

    def test_budget_truncation_flagged(self):
        d = bose(15)
        rep = exact_max_nonincident(d, node_budget=10)
        assert not rep.exact
        assert rep.nodes_visited >= 10

    def test_reproducible_single_worker(self):
        d = build_sts(13, seed=4)
        a = exact_max_nonincident(d)
        b = exact_max_nonincident(d)
        assert a.certificate == b.certificate
        assert a.nodes_visited == b.nodes_visited

    def test_parallel_matches_serial(self):
        d = build_sts(13, seed=9)
        serial = exact_max_nonincident(d)
        parallel = exact_max_nonincident(d, workers=2)
        assert parallel.best_s == serial.best_s
        assert verify_certificate(d, parallel.certificate, require_square=True)


class TestGreedy:
    def test_fano_matches_exact(self, fano):
        rep = greedy_max_nonincident(fano)
        assert rep.best_s == 2
        assert not rep.exact
        assert verify_certificate(fano, rep.certificate, require_square=True)

    def test_never_beats_exact(self):
        for seed in range(3):
            d = embed_subsystem(3, 15, seed=seed).design
            assert (
                greedy_max_nonincident(d).best_s
                <= exact_max_nonincident(d).best_s
            )

    def test_seeded_with_subsystem_complement(self):
        emb = embed_subsystem(9, 21, seed=1)
        complement = [p for p in range(21) if p not in emb.sub_points]
        rep = greedy_max_nonincident(emb.design, start=complement)
        assert rep.best_s >= 12
        assert verify_certificate(emb.design, rep.certificate, require_square=True)

    def test_bounded_by_ceiling(self):
        d = bose(27)
        rep = greedy_max_nonincident(d)
        assert rep.best_s <= rep.bound_used == nonincidence_upper_bound(27)


class TestBruteForce:
    def test_fano(self, fano):
        assert brute_force_oracle(fano) == 2

    def test_ag23(self, ag23):
        assert brute_force_oracle(ag23) == 3

    def test_single_block(self):
        assert brute_force_oracle(bose(3)) == 0

    def test_refuses_large_orders(self):
        d19, _ = doubling(bose(9))
        with pytest.raises(ValueError):
            brute_force_oracle(d19)


def test_subsystem_lower_bound_witness():
    # A sub-STS(w) with at least v-w blocks forces best_s >= v-w.
    emb = embed_subsystem(9, 21, seed=6)
    complement = [p for p in range(21) if p not in emb.sub_points]
    rep = greedy_max_nonincident(emb.design, start=complement)
    assert rep.best_s >= 21 - 9


def test_report_serialization_round_trips():
    import json

    d = build_sts(13, seed=2)
    rep = exact_max_nonincident(d)
    data = json.loads(rep.to_json())
    assert data["best_s"] == rep.best_s
    assert data["exact"] is True
    assert data["bound_used"] == 6
    assert data["certificate"]["design_digest"] == d.digest()
