import json
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from certificates.bounds import upper_bound_report
from certificates.constructions import classical_measurements, \
    classical_to_rank1, projector_to_general, rank1_to_general, \
    rank1_to_projector, rank1_to_rep, real_rep_to_rank1_od, \
    unit_modulus_rep_to_rank1
from certificates.designs import design, fourier_matrix, od_matrix
from certificates.io import cert_from_dict, dump_cert, load_cert, \
    measurements_from_dict
from certificates.models import GeneralCert, ProjectorCert, Rank1Cert, \
    maximally_entangled_state
from certificates.transforms import apply_gauge, equalize_ranks, \
    extract_classical_3col, normal_form, pullback, random_unitary, \
    tensor_union, vertex_phases
from certificates.verify import projector_ranks, verify, verify_general, \
    verify_projector, verify_rank1
from graphs.generators import complete_graph, cycle_graph
from graphs.graph import ClassicalColouring, Graph, Homomorphism
from graphs.operations import union_same_vertices
from graphs.strategies import coloured_graphs
from utils.enums import Backend
from utils.errors import BoundError, CertificateError, ColouringError, \
    GraphError, RepresentationError
from vectors.constructions import fourth_roots_dim4_graph, hadamard_graph, \
    hadamard_vectors, roots_of_unity_graph, standard_basis
from vectors.datasets import g18_dataset
from vectors.representation import VectorRep, check_representation

PROPERTY_SETTINGS = settings(max_examples=200, derandomize=True,
                             deadline=None)

C5_COLOURING = ClassicalColouring(3, (0, 1, 0, 1, 2))


class TestModels:

    def test_shapes(self):
        with pytest.raises(CertificateError):
            Rank1Cert(np.zeros((2, 3, 2)))
        with pytest.raises(CertificateError):
            Rank1Cert(np.eye(2))
        with pytest.raises(CertificateError):
            Rank1Cert(np.full((1, 2, 2), np.nan))
        with pytest.raises(CertificateError):
            ProjectorCert(2, np.zeros((1, 2, 2, 2)))
        with pytest.raises(CertificateError):
            GeneralCert(np.ones(3), np.zeros((1, 2, 2, 2)),
                        np.zeros((1, 2, 2, 2)))
        with pytest.raises(CertificateError):
            GeneralCert(np.ones(4), np.zeros((1, 2, 2, 2)),
                        np.zeros((2, 2, 2, 2)))

    def test_dimension_cap(self):
        with pytest.raises(CertificateError):
            ProjectorCert(257, np.zeros((1, 1, 257, 257)))

    def test_maximally_entangled(self):
        state = maximally_entangled_state(3)
        assert np.linalg.norm(state) == pytest.approx(1.0)
        assert state[0] == pytest.approx(1 / math.sqrt(3))
        assert state[1] == 0


class TestDesigns:

    @pytest.mark.parametrize('order', [4, 8])
    def test_od(self, order):
        design(order)
        x = np.arange(1, order + 1, dtype=float)
        matrix = od_matrix(x)
        assert np.allclose(matrix @ matrix.T, (x @ x) * np.eye(order))
        assert np.allclose(matrix[0], x)

    def test_unsupported_order(self):
        with pytest.raises(CertificateError):
            design(3)

    def test_fourier(self):
        F = fourier_matrix(5)
        assert np.allclose(F @ F.conj().T, np.eye(5))
        assert np.allclose(np.abs(F), 1 / math.sqrt(5))


class TestLifts:

    g18, g18_rep = g18_dataset()

    def test_od_lift_g18(self):
        cert = real_rep_to_rank1_od(self.g18, self.g18_rep)
        assert cert.c == 4
        report = verify_rank1(self.g18, cert)
        assert report.passed
        assert report.worst_residual <= 1e-9
        assert report.details == {'kind': 'rank1', 'c': 4}

    def test_od_lift_pads_to_eight(self):
        graph = complete_graph(5)
        cert = real_rep_to_rank1_od(graph, standard_basis(5))
        assert cert.c == 8
        assert verify(graph, cert).passed

    def test_od_lift_rejects(self):
        graph, rep = fourth_roots_dim4_graph()
        with pytest.raises(RepresentationError):
            real_rep_to_rank1_od(graph, rep)
        with pytest.raises(RepresentationError):
            real_rep_to_rank1_od(complete_graph(9), standard_basis(9))
        bad = VectorRep(2, Backend.INTEGER, ((1, 0), (1, 1)))
        with pytest.raises(RepresentationError):
            real_rep_to_rank1_od(complete_graph(2), bad)

    def test_fourier_lift(self):
        for graph, rep in [(hadamard_graph(4), hadamard_vectors(4)),
                           fourth_roots_dim4_graph(),
                           roots_of_unity_graph(3)]:
            cert = unit_modulus_rep_to_rank1(graph, rep)
            assert cert.c == rep.dim
            assert verify_rank1(graph, cert).passed

    def test_fourier_lift_needs_constant_modulus(self):
        with pytest.raises(RepresentationError):
            unit_modulus_rep_to_rank1(self.g18, self.g18_rep)

    def test_classical_lift(self):
        cert = classical_to_rank1(cycle_graph(5), C5_COLOURING)
        assert cert.c == 3
        assert verify_rank1(cycle_graph(5), cert).passed
        with pytest.raises(ColouringError):
            classical_to_rank1(cycle_graph(5),
                               ClassicalColouring(2, (0, 1, 0, 1, 0)))

    def test_conversions(self):
        cert = real_rep_to_rank1_od(self.g18, self.g18_rep)
        projectors = rank1_to_projector(cert)
        assert projectors.r == 1
        assert verify_projector(self.g18, projectors).passed
        general = rank1_to_general(cert)
        assert general.dA == general.dB == 4
        assert verify_general(self.g18, general).passed
        rep = rank1_to_rep(cert)
        assert rep.backend is Backend.COMPLEX_FLOAT
        assert check_representation(self.g18, rep).passed


class TestNegativeControls:

    g18, g18_rep = g18_dataset()

    def _cert(self):
        return real_rep_to_rank1_od(self.g18, self.g18_rep)

    def test_swapped_columns(self):
        cert = self._cert()
        U = cert.unitaries.copy()
        U[14] = U[14][:, [1, 0, 2, 3]]
        report = verify_rank1(self.g18, Rank1Cert(U))
        assert not report.passed
        edges = {v.where for v in report.violations if v.kind == 'edge'}
        assert (14, 17) in edges
        assert all(14 in where for where in edges)

    def test_perturbed_entry(self):
        cert = self._cert()
        U = cert.unitaries.copy()
        U[0, 0, 0] += 1e-3
        report = verify_rank1(self.g18, Rank1Cert(U))
        assert not report.passed
        assert any(v.kind == 'unitary' and v.where == (0,)
                   for v in report.violations)
        assert report.worst_residual > 1e-4

    def test_monochromatic_edge(self):
        cert = classical_to_rank1(cycle_graph(5), C5_COLOURING)
        graph = Graph(5, list(cycle_graph(5).edges) + [(0, 2)])
        for candidate in (cert, rank1_to_projector(cert),
                          rank1_to_general(cert)):
            report = verify(graph, candidate)
            assert not report.passed
            assert any(v.kind == 'edge' and set(v.where) == {0, 2}
                       and v.colours == (0,) for v in report.violations)

    def test_rank_mismatch_is_a_violation(self):
        E = np.zeros((1, 2, 2, 2), dtype=complex)
        E[0, 0] = np.eye(2)
        report = verify_projector(Graph(1), ProjectorCert(1, E))
        assert not report.passed
        assert {v.kind for v in report.violations} == {'rank'}

    def test_vertex_mismatch(self):
        cert = classical_to_rank1(cycle_graph(5), C5_COLOURING)
        with pytest.raises(CertificateError):
            verify(cycle_graph(4), cert)


class TestGauge:

    g18, g18_rep = g18_dataset()

    def test_gauges_preserve_validity(self):
        cert = real_rep_to_rank1_od(self.g18, self.g18_rep)
        for seed in range(100):
            gauged = apply_gauge(cert, left=random_unitary(4, seed),
                                 phases=vertex_phases(18, 4, seed))
            report = verify_rank1(self.g18, gauged)
            assert report.passed
            assert report.worst_residual <= 1e-9

    def test_random_unitary(self):
        W = random_unitary(6, 3)
        assert np.allclose(W @ W.conj().T, np.eye(6))
        assert np.allclose(W, random_unitary(6, 3))


class TestTransforms:

    g18, g18_rep = g18_dataset()

    def test_normal_form_of_projective_strategy(self):
        cert = rank1_to_projector(real_rep_to_rank1_od(self.g18,
                                                       self.g18_rep))
        result, report = normal_form(self.g18, projector_to_general(cert))
        assert report.passed
        assert report.details['schmidt_rank'] == 4
        assert not report.details['equalized']
        assert result.r == 1
        assert np.allclose(result.projectors, cert.projectors, atol=1e-9)
        assert verify_projector(self.g18, result).passed

    def test_normal_form_undoes_bob_unitary(self):
        cert = rank1_to_projector(real_rep_to_rank1_od(self.g18,
                                                       self.g18_rep))
        W = random_unitary(4, 11)
        state = np.kron(np.eye(4), W) @ maximally_entangled_state(4)
        bob = np.einsum('ij,vajk,lk->vail', W, cert.projectors.conj(),
                        W.conj())
        general = GeneralCert(state, cert.projectors, bob)
        assert verify_general(self.g18, general).passed
        result, report = normal_form(self.g18, general)
        assert report.passed
        assert verify_projector(self.g18, result).passed

    @staticmethod
    def _diagonal_strategy(state):
        first, second = np.diag([1, 0]), np.diag([0, 1])
        measurements = np.array([[first, second], [second, first]])
        return GeneralCert(state, measurements, measurements)

    def test_normal_form_of_partially_entangled_state(self):
        state = np.array([math.sqrt(0.7), 0, 0, math.sqrt(0.3)])
        k2 = complete_graph(2)
        result, report = normal_form(k2, self._diagonal_strategy(state))
        assert report.passed
        assert report.details['schmidt_rank'] == 2
        assert not report.details['equalized']
        assert result.r == 1
        assert np.allclose(result.projectors[0],
                           [np.diag([1, 0]), np.diag([0, 1])], atol=1e-9)
        assert np.allclose(result.projectors[1],
                           [np.diag([0, 1]), np.diag([1, 0])], atol=1e-9)
        assert verify_projector(k2, result).passed

    def test_normal_form_of_product_state(self):
        k2 = complete_graph(2)
        cert = self._diagonal_strategy(np.array([1, 0, 0, 0]))
        result, report = normal_form(k2, cert)
        assert report.passed
        assert report.details['schmidt_rank'] == 1
        assert report.details['equalized']
        assert result.r == 1
        assert result.d == 2
        assert verify_projector(k2, result).passed

    def test_normal_form_rejects_losing_strategy(self):
        cert = rank1_to_general(classical_to_rank1(cycle_graph(5),
                                                   C5_COLOURING))
        graph = Graph(5, list(cycle_graph(5).edges) + [(0, 2)])
        with pytest.raises(CertificateError) as e:
            normal_form(graph, cert)
        assert e.value.report is not None
        assert not e.value.report.passed

    def test_tensor_union(self):
        c6 = cycle_graph(6)
        cert_g = classical_to_rank1(c6, ClassicalColouring(
            2, (0, 1, 0, 1, 0, 1)))
        chords = Graph(6, [(0, 2), (1, 4), (3, 5)])
        cert_h = classical_to_rank1(chords, ClassicalColouring(
            2, (0, 0, 1, 1, 1, 0)))
        union = union_same_vertices(c6, chords)
        combined = tensor_union(cert_g, cert_h)
        assert combined.c == 4
        assert combined.d == 4
        assert verify_projector(union, combined).passed
        with pytest.raises(CertificateError):
            tensor_union(cert_g, classical_to_rank1(cycle_graph(5),
                                                    C5_COLOURING))
        with pytest.raises(CertificateError):
            tensor_union(cert_g, rank1_to_general(cert_h))

    def test_pullback(self):
        k3 = complete_graph(3)
        target = classical_to_rank1(k3, ClassicalColouring(3, (0, 1, 2)))
        hom = Homomorphism(cycle_graph(5), k3, C5_COLOURING.colours)
        for cert in (target, rank1_to_projector(target),
                     rank1_to_general(target)):
            pulled = pullback(hom, cert)
            assert pulled.n == 5
            assert verify(cycle_graph(5), pulled).passed
        with pytest.raises(CertificateError):
            pullback(Homomorphism(k3, k3, (0, 1, 2)),
                     classical_to_rank1(cycle_graph(5), C5_COLOURING))

    def test_equalize_classical_strategy(self):
        measurements = classical_measurements(C5_COLOURING)
        cert = equalize_ranks(measurements)
        assert cert.r == 1
        assert cert.d == 3
        assert verify_projector(cycle_graph(5), cert).passed

    def test_equalize_rank1_lift(self):
        k2 = complete_graph(2)
        lift = rank1_to_projector(classical_to_rank1(
            k2, ClassicalColouring(2, (0, 1))))
        cert = equalize_ranks(lift.projectors)
        assert cert.r == 2
        assert cert.d == 4
        assert verify_projector(k2, cert).passed

    def test_equalize_mixed_ranks(self):
        U = random_unitary(3, 5)
        wide = U @ np.diag([1, 1, 0]) @ U.conj().T
        narrow = U @ np.diag([0, 0, 1]) @ U.conj().T
        measurements = np.array([[wide, narrow], [narrow, wide]])
        assert projector_ranks(measurements).tolist() == [[2, 1], [1, 2]]
        cert = equalize_ranks(measurements)
        assert cert.r == 3
        assert cert.d == 6
        assert (projector_ranks(cert.projectors) == 3).all()
        assert verify_projector(complete_graph(2), cert).passed

    def test_equalize_rejects_incomplete(self):
        measurements = classical_measurements(C5_COLOURING)
        measurements[0, 0] = 0
        with pytest.raises(CertificateError):
            equalize_ranks(measurements)
        with pytest.raises(CertificateError):
            equalize_ranks(np.zeros((2, 2)))

    def test_extract(self):
        cert = classical_to_rank1(cycle_graph(5), C5_COLOURING)
        colouring = extract_classical_3col(cycle_graph(5), cert)
        assert colouring.compacted() == C5_COLOURING.compacted()
        with pytest.raises(CertificateError):
            extract_classical_3col(self.g18, real_rep_to_rank1_od(
                self.g18, self.g18_rep))
        with pytest.raises(GraphError):
            extract_classical_3col(Graph(2), classical_to_rank1(
                Graph(2), ClassicalColouring(3, (0, 1))))


class TestIO:

    def test_json(self):
        graph, rep = g18_dataset()
        cert = real_rep_to_rank1_od(graph, rep)
        data = json.loads(dump_cert(graph, cert))
        assert data['kind'] == 'rank1'
        assert data['c'] == 4
        loaded_graph, loaded = load_cert(dump_cert(graph, cert))
        assert loaded_graph == graph
        assert np.allclose(loaded.unitaries, cert.unitaries)

    def test_general_json(self):
        cert = rank1_to_general(classical_to_rank1(cycle_graph(5),
                                                   C5_COLOURING))
        graph, loaded = load_cert(dump_cert(cycle_graph(5), cert))
        assert isinstance(loaded, GeneralCert)
        assert verify(graph, loaded).passed

    def test_malformed(self):
        with pytest.raises(CertificateError):
            cert_from_dict({'kind': 'rank1', 'graph': {'n': 1, 'edges': []}})
        with pytest.raises(CertificateError):
            cert_from_dict({'kind': 'bogus', 'graph': {'n': 1, 'edges': []},
                            'matrices': []})
        data = json.loads(dump_cert(cycle_graph(5), classical_to_rank1(
            cycle_graph(5), C5_COLOURING)))
        data['c'] = 4
        with pytest.raises(CertificateError):
            cert_from_dict(data)

    def test_measurements(self):
        graph = cycle_graph(5)
        data = json.loads(dump_cert(graph, rank1_to_projector(
            classical_to_rank1(graph, C5_COLOURING))))
        loaded_graph, projectors = measurements_from_dict(data)
        assert loaded_graph == graph
        assert projectors.shape == (5, 3, 3, 3)
        data['kind'] = 'rank1'
        with pytest.raises(CertificateError):
            measurements_from_dict(data)


class TestBounds:

    def test_values(self):
        assert upper_bound_report(1) == pytest.approx((1 + 2 * 2 ** 0.5) ** 2)
        assert upper_bound_report(2) == pytest.approx(upper_bound_report(1)
                                                      ** 2)

    def test_range(self):
        with pytest.raises(BoundError):
            upper_bound_report(0)
        with pytest.raises(BoundError):
            upper_bound_report(101)


class TestProperties:

    @PROPERTY_SETTINGS
    @given(coloured_graphs(c=3))
    def test_classical_lift_verifies(self, pair):
        graph, colouring = pair
        cert = classical_to_rank1(graph, colouring)
        assert verify_rank1(graph, cert).passed
        assert verify_projector(graph, rank1_to_projector(cert)).passed
        assert check_representation(graph, rank1_to_rep(cert)).passed

    @PROPERTY_SETTINGS
    @given(coloured_graphs(c=4, max_n=7))
    def test_general_and_round_trip(self, pair):
        graph, colouring = pair
        cert = rank1_to_general(classical_to_rank1(graph, colouring))
        assert verify_general(graph, cert).passed
        loaded_graph, loaded = load_cert(dump_cert(graph, cert))
        assert loaded_graph == graph
        assert verify_general(loaded_graph, loaded).passed

    @PROPERTY_SETTINGS
    @given(coloured_graphs(c=2, max_n=7), st.data())
    def test_tensor_union(self, pair, data):
        g, g_colouring = pair
        h, h_colouring = data.draw(coloured_graphs(c=2, min_n=g.n,
                                                   max_n=g.n))
        combined = tensor_union(classical_to_rank1(g, g_colouring),
                                classical_to_rank1(h, h_colouring))
        assert combined.c == 4
        assert verify_projector(union_same_vertices(g, h), combined).passed

    @PROPERTY_SETTINGS
    @given(coloured_graphs(c=3))
    def test_pullback(self, pair):
        graph, colouring = pair
        k3 = complete_graph(3)
        target = classical_to_rank1(k3, ClassicalColouring(3, (0, 1, 2)))
        pulled = pullback(Homomorphism(graph, k3, colouring.colours), target)
        assert verify_rank1(graph, pulled).passed

    @PROPERTY_SETTINGS
    @given(coloured_graphs(c=4))
    def test_equalize(self, pair):
        graph, colouring = pair
        cert = equalize_ranks(classical_measurements(colouring))
        assert cert.c == 4
        assert verify_projector(graph, cert).passed

    @PROPERTY_SETTINGS
    @given(coloured_graphs(c=3, connected=True))
    def test_extract(self, pair):
        graph, colouring = pair
        cert = classical_to_rank1(graph, colouring)
        extracted = extract_classical_3col(graph, cert)
        assert extracted.compacted() == colouring.compacted()


if __name__ == '__main__':
    pytest.main()
