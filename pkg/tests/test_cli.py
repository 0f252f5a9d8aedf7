import json
import logging

import numpy as np
import pytest

from radialnet.cli import main
from radialnet.generators import BaSpec, ba_generate
from radialnet.ingest import write_graph_edge_list


def write_graph(path, g):
    with open(path, "w") as f:
        write_graph_edge_list(g, f)


def read_files(out_dir, skip=("manifest.json",)):
    return {p.name: p.read_bytes() for p in sorted(out_dir.iterdir())
            if p.name not in skip}


class TestGenerate:
    def test_ba_n10_m3(self, tmp_path):
        rc = main(["generate", "ba", "--n", "10", "--m", "3", "--seed", "1",
                   "--out-dir", str(tmp_path)])
        assert rc == 0
        lines = (tmp_path / "ba.edges").read_text().strip().split("\n")
        assert len(lines) == 21
        hist = (tmp_path / "degree_histogram.csv").read_text().strip().split("\n")
        assert hist[0] == "degree,count"
        assert hist[-1].startswith("# ccdf_fit")
        manifest = json.loads((tmp_path / "manifest.json").read_text())
        assert manifest["command"] == "generate"
        for name in manifest["outputs"]:
            assert (tmp_path / name).exists()

    def test_ba_n4_m3_star(self, tmp_path):
        rc = main(["generate", "ba", "--n", "4", "--m", "3", "--out-dir", str(tmp_path)])
        assert rc == 0
        assert (tmp_path / "ba.edges").read_text() == "0 3\n1 3\n2 3\n"

    def test_invalid_params(self, tmp_path):
        rc = main(["generate", "ba", "--n", "3", "--m", "3", "--out-dir", str(tmp_path)])
        assert rc == 2


class TestIngest:
    def test_merge_path_files(self, tmp_path, capsys):
        f1 = tmp_path / "a.paths"
        f1.write_text("701 1239 3356\n701 701 1239\n")
        f2 = tmp_path / "b.paths"
        f2.write_text("# comment\n1239 3356\n10 {20,30} 40\n")
        out = tmp_path / "out"
        rc = main(["ingest", "--paths", str(f1), "--paths", str(f2),
                   "--baseline", str(f1), "--out-dir", str(out)])
        assert rc == 0
        merged = (out / "merged.edges").read_text()
        assert merged == "701 1239\n1239 3356\n"
        rows = (out / "sources.csv").read_text().strip().split("\n")
        assert rows[0] == "source,edges,exclusive,gain"
        assert rows[-1].startswith("union,2,")

    def test_single_edge_list_passthrough(self, tmp_path):
        src = tmp_path / "g.edges"
        src.write_text("5 7\n1 2\n")
        out = tmp_path / "out"
        rc = main(["ingest", "--edges", str(src), "--out-dir", str(out)])
        assert rc == 0
        assert (out / "merged.edges").read_text() == "1 2\n5 7\n"

    def test_missing_file(self, tmp_path, capsys):
        rc = main(["ingest", "--edges", str(tmp_path / "absent.edges"),
                   "--out-dir", str(tmp_path / "out")])
        assert rc != 0
        assert "absent.edges" in capsys.readouterr().err

    def test_parse_error_reported(self, tmp_path, capsys):
        bad = tmp_path / "bad.edges"
        bad.write_text("1 2\nnot numbers\n")
        rc = main(["ingest", "--edges", str(bad), "--out-dir", str(tmp_path / "out")])
        assert rc == 2
        assert "line 2" in capsys.readouterr().err


class TestAnalyze:
    def test_star_fixture(self, tmp_path):
        src = tmp_path / "star.edges"
        src.write_text("0 1\n0 2\n0 3\n")
        out = tmp_path / "out"
        rc = main(["analyze", str(src), "--out-dir", str(out)])
        assert rc == 0
        rows = (out / "metrics.csv").read_text().strip().split("\n")
        assert rows[0] == "as_number,dbar,ecc,k,K,C,phi,b"
        center = rows[1].split(",")
        assert center == ["0", "1", "1", "3", "1", "0", "1", "0"]
        leaf = rows[2].split(",")
        assert leaf[1] == f"{5 / 3:.12g}"
        assert leaf[5] == ""  # C undefined at degree 1
        assert leaf[6] == "0"
        assert leaf[7] == "1"
        summary = dict(line.split(",", 1) for line in
                       (out / "summary.csv").read_text().strip().split("\n")[1:])
        assert summary["retained_fraction"] == "1"
        assert summary["tier1_present"] == "0"

    def test_bin_width_flag(self, tmp_path):
        src = tmp_path / "g.edges"
        write_graph(src, ba_generate(BaSpec(n=60, m=2, seed=3)))
        out = tmp_path / "out"
        rc = main(["analyze", str(src), "--bin-width", "0.2", "--out-dir", str(out)])
        assert rc == 0
        rows = (out / "histogram.csv").read_text().strip().split("\n")[1:]
        centers = [float(r.split(",")[0]) for r in rows]
        spacing = np.diff(centers)
        assert np.allclose(spacing, 0.2)

    def test_disconnected_uses_largest_component(self, tmp_path):
        src = tmp_path / "g.edges"
        src.write_text("1 2\n2 3\n3 1\n1 4\n8 9\n")
        out = tmp_path / "out"
        rc = main(["analyze", str(src), "--out-dir", str(out)])
        assert rc == 0
        summary = dict(line.split(",", 1) for line in
                       (out / "summary.csv").read_text().strip().split("\n")[1:])
        assert summary["n"] == "4"
        assert float(summary["retained_fraction"]) == pytest.approx(4 / 6)

    def test_byte_identical_reruns(self, tmp_path):
        src = tmp_path / "g.edges"
        write_graph(src, ba_generate(BaSpec(n=80, m=3, seed=9)))
        out1, out2 = tmp_path / "r1", tmp_path / "r2"
        assert main(["analyze", str(src), "--threads", "1", "--out-dir", str(out1)]) == 0
        assert main(["analyze", str(src), "--threads", "2", "--out-dir", str(out2)]) == 0
        assert read_files(out1) == read_files(out2)


class TestNullmodel:
    def test_reproducible_aggregate(self, tmp_path):
        src = tmp_path / "g.edges"
        write_graph(src, ba_generate(BaSpec(n=50, m=2, seed=4)))
        out1, out2 = tmp_path / "r1", tmp_path / "r2"
        args = ["nullmodel", str(src), "--realizations", "2", "--seed", "7"]
        assert main(args + ["--out-dir", str(out1)]) == 0
        assert main(args + ["--threads", "2", "--out-dir", str(out2)]) == 0
        assert read_files(out1) == read_files(out2)
        manifest = json.loads((out1 / "manifest.json").read_text())
        assert manifest["command"] == "nullmodel"

    def test_star_warning_and_identity_aggregate(self, tmp_path, caplog):
        src = tmp_path / "star.edges"
        src.write_text("".join(f"0 {i}\n" for i in range(1, 6)))
        out = tmp_path / "out"
        with caplog.at_level(logging.WARNING):
            rc = main(["nullmodel", str(src), "--realizations", "2", "--seed", "1",
                       "--out-dir", str(out)])
        assert rc == 0
        assert any("no move accepted" in r.message for r in caplog.records)
        # unchanged realizations aggregate to the star's own histogram
        from radialnet.graph import EdgeSet, build_graph
        from radialnet.profiles import radial_histogram
        from radialnet.radial import average_distances
        g = build_graph(EdgeSet([(0, i) for i in range(1, 6)]))
        expect = radial_histogram(average_distances(g), 0.1)
        rows = (out / "nullmodel_histogram.csv").read_text().strip().split("\n")[1:]
        means = np.array([float(r.split(",")[1]) for r in rows])
        assert np.allclose(means, expect.fractions, atol=1e-12)
        stderrs = [r.split(",")[2] for r in rows]
        assert all(float(s) == 0.0 for s in stderrs)

    def test_dump_realizations(self, tmp_path):
        src = tmp_path / "g.edges"
        write_graph(src, ba_generate(BaSpec(n=40, m=2, seed=2)))
        out = tmp_path / "out"
        rc = main(["nullmodel", str(src), "--realizations", "3", "--seed", "0",
                   "--dump-realizations", "--out-dir", str(out)])
        assert rc == 0
        for r in range(3):
            dumped = (out / f"realization_{r}.edges").read_text().strip().split("\n")
            assert len(dumped) == 2 * (40 - 2)
