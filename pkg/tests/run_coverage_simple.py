#!/usr/bin/env python3
"""
Analyse de couverture des tests unitaires du projet coxmod.

Le rapport est regroupé par paquet (fp, coxeter, matgroup, ...) puis détaillé
par fichier avec --detailed.
"""

import coverage
import unittest
import sys
import os
import time
from collections import defaultdict

# Ajouter le répertoire python au path pour les imports
PYTHON_DIR = os.path.abspath(os.path.join(os.path.dirname(__file__), '..', 'python'))
sys.path.insert(0, PYTHON_DIR)

LOW_COVERAGE = 80.0


def run_coverage_analysis(html=False):
    """Exécute les tests sous coverage et retourne (cov, result, durée)."""
    print("coxmod - Analyse de Couverture des Tests")
    print("=" * 60)

    cov = coverage.Coverage(source=[PYTHON_DIR], omit=['*/__pycache__/*'])
    cov.start()

    suite = unittest.TestLoader().discover(os.path.dirname(__file__), pattern='test_*.py')
    start_time = time.time()
    result = unittest.TextTestRunner(verbosity=1).run(suite)
    duration = time.time() - start_time

    cov.stop()
    cov.save()

    print("\n" + "=" * 60)
    print("RAPPORT DE COUVERTURE")
    print("=" * 60)
    total = cov.report(show_missing=False)
    print(f"\nCouverture globale : {total:.1f}%")

    if html:
        cov.html_report(directory='coverage_html')
        print("Rapport HTML généré dans le dossier 'coverage_html'")

    return cov, result, duration


def package_summary(cov):
    """Couverture par paquet : {paquet: (instructions, manquantes)}."""
    totals = defaultdict(lambda: [0, 0])
    for filename in cov.get_data().measured_files():
        rel = os.path.relpath(filename, PYTHON_DIR)
        package = rel.split(os.sep)[0] if os.sep in rel else "coxmod"
        _, statements, _, missing, _ = cov.analysis2(filename)
        totals[package][0] += len(statements)
        totals[package][1] += len(missing)
    return {name: tuple(values) for name, values in totals.items()}


def print_package_summary(cov):
    print("\n--- Couverture par paquet ---")
    for name, (statements, missing) in sorted(package_summary(cov).items()):
        percentage = 100.0 * (statements - missing) / statements if statements else 100.0
        flag = "  <" if percentage < LOW_COVERAGE else ""
        print(f"  - {name} : {percentage:.1f}% ({statements - missing}/{statements}){flag}")


def print_missing_lines(cov):
    """Lignes non couvertes, fichier par fichier."""
    print("\n--- Lignes non couvertes ---")
    for filename in sorted(cov.get_data().measured_files()):
        _, _, _, _, missing_text = cov.analysis2(filename)
        if missing_text:
            print(f"  - {os.path.relpath(filename, PYTHON_DIR)} : {missing_text}")


if __name__ == '__main__':
    import argparse

    parser = argparse.ArgumentParser(description='Analyser la couverture des tests unitaires coxmod')
    parser.add_argument('--detailed', action='store_true', help='Afficher les lignes non couvertes')
    parser.add_argument('--html', action='store_true', help='Générer le rapport HTML')
    args = parser.parse_args()

    cov, result, duration = run_coverage_analysis(html=args.html)
    print_package_summary(cov)
    if args.detailed:
        print_missing_lines(cov)

    print(f"\nDurée totale : {duration:.2f} secondes")
    print(f"Tests : {result.testsRun}, échecs : {len(result.failures)}, erreurs : {len(result.errors)}")
    sys.exit(1 if result.failures or result.errors else 0)
