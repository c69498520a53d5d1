"""
Tests de la ligne de commande coxmod : sous-commandes, sortie JSON et
codes de sortie (0 = correct, 1 = usage ou syntaxe, 2 = ligne en erreur).
"""

import json
import tempfile
import unittest
from io import StringIO
from pathlib import Path
from unittest.mock import patch

import yaml

from core.config import create_default_config
from coxmod import EXIT_OK, EXIT_ROW_ERROR, EXIT_USAGE, main, resolve_config_path


def run(*argv):
    """Exécute main et retourne (code, stdout, stderr)."""
    with patch("sys.stdout", new_callable=StringIO) as out, patch("sys.stderr", new_callable=StringIO) as err:
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


class TestAnalyzeCommand(unittest.TestCase):
    """Tests pour la sous-commande analyze."""

    def test_json_report(self):
        """Test du rapport JSON de [4,4,3]@1,2,1,1 à p = 3."""
        code, out, _ = run("analyze", "[4,4,3]@1,2,1,1", "-p", "3", "--json")
        self.assertEqual(code, EXIT_OK)
        reports = json.loads(out)
        self.assertEqual(reports[0]["order"], 1440)
        self.assertEqual(reports[0]["named"]["label"], "O(4,3,-1)")
        self.assertEqual(list(reports[0])[:3], ["system", "p", "genericity"])

    def test_text_report(self):
        """Test de l'affichage lisible."""
        code, out, _ = run("analyze", "[4,4,3]@1,2,1,1", "-p", "3")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("--- [4,4,3]@1,2,1,1 at p=3 ---", out)
        self.assertIn("  - order : 1440", out)

    def test_syntax_error(self):
        """Test d'un diagramme mal formé : code 1."""
        code, _, err = run("analyze", "[4,4,3@1,2,1,1", "-p", "3")
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("ERROR", err)

    def test_bad_prime(self):
        """Test d'un premier invalide : code 1."""
        code, _, _ = run("analyze", "[4,4,3]@1,2,1,1", "-p", "9")
        self.assertEqual(code, EXIT_USAGE)

    def test_row_error(self):
        """Test d'un seuil d'énumération minuscule : ligne en erreur, code 2."""
        config = create_default_config()
        config["engine"]["element-threshold"] = 1
        with tempfile.TemporaryDirectory() as temp_dir:
            path = Path(temp_dir) / "tiny.yaml"
            path.write_text(yaml.safe_dump(config), encoding="utf-8")
            code, out, _ = run("analyze", "[4,4,3]@1,2,1,1", "-p", "3", "--json", "-f", str(path))
        self.assertEqual(code, EXIT_ROW_ERROR)
        self.assertTrue(json.loads(out)[0]["error"].startswith("TooLarge"))

    def test_missing_subcommand(self):
        """Test d'un appel sans sous-commande : code 1."""
        with patch("sys.stderr", new_callable=StringIO):
            with self.assertRaises(SystemExit) as cm:
                main([])
        self.assertEqual(cm.exception.code, EXIT_USAGE)

    def test_missing_config(self):
        """Test d'une configuration introuvable : code 1."""
        code, _, err = run("analyze", "[4,4,3]@1,2,1,1", "-p", "3", "-f", "missing")
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("missing.yaml", err)


class TestOtherCommands(unittest.TestCase):
    """Tests pour basic-systems, tc, dual-check et census."""

    def test_basic_systems(self):
        """Test de basic-systems [6,3,6] : 3 classes à p = 3."""
        code, out, _ = run("basic-systems", "[6,3,6]", "-p", "3", "--json")
        self.assertEqual(code, EXIT_OK)
        rows = json.loads(out)
        self.assertEqual(len({row["class"] for row in rows}), 3)

    def test_tc_validate(self):
        """Test de tc sur une présentation livrée, avec certification."""
        code, out, _ = run("tc", "universal_443_s3", "--validate", "--json")
        self.assertEqual(code, EXIT_OK)
        result = json.loads(out)
        self.assertEqual(result["index"], 30)
        self.assertTrue(result["closed"])
        self.assertTrue(result["validated"])
        self.assertEqual(result["status"], "certified")
        self.assertEqual(result["declared_status"], result["status"])

    def test_tc_trivial_subgroup(self):
        """Test de tc --trivial : ordre du groupe présenté."""
        code, out, _ = run("tc", "torus_44_s3", "--trivial")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("  - index : 72", out)

    def test_dual_check(self):
        """Test de dual-check avec une recette de mélange."""
        code, out, _ = run("dual-check", "[6,3,6]@1,3,3,1", "-p", "3", "--recipe", "dual", "--json")
        self.assertEqual(code, EXIT_OK)
        result = json.loads(out)
        self.assertTrue(result["self_dual"]["self_dual"])
        self.assertEqual(result["mixing"]["index"], 1)

    def test_census(self):
        """Test de census : tables écrites et JSON sur la sortie standard."""
        with tempfile.TemporaryDirectory() as temp_dir:
            code, out, _ = run("census", "[6,3,6]", "-p", "3", "-t", "1", "-o", temp_dir, "--json",
                               "--stem", "run")
            self.assertTrue((Path(temp_dir) / "run.tsv").exists())
            self.assertTrue((Path(temp_dir) / "run.json").exists())
            metrics = json.loads((Path(temp_dir) / "run_metrics.json").read_text(encoding="utf-8"))
            self.assertGreaterEqual(metrics["summary"]["summary"]["total_jobs"], 3)
            self.assertIn("jobs", metrics)
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(len(json.loads(out)), 3)


class TestResolveConfigPath(unittest.TestCase):
    """Tests pour resolve_config_path."""

    def test_named_and_explicit(self):
        """Test d'un nom d'environnement et d'un chemin explicite."""
        base = Path("/srv/coxmod")
        self.assertEqual(resolve_config_path(base, "prod"), base / "prod.yaml")
        self.assertEqual(resolve_config_path(base, "/etc/coxmod.yaml"), Path("/etc/coxmod.yaml"))


if __name__ == '__main__':
    unittest.main()
