"""Verification: certificates and reference solvers."""
from .certificate import CertificateReport, check_certificate
from .simplex import BlandSimplex, OracleResult, OracleStatus, simplex_solve
from .enumeration import BasisEnumeration, enumeration_solve

__all__ = ['CertificateReport', 'check_certificate',
           'BlandSimplex', 'OracleResult', 'OracleStatus', 'simplex_solve',
           'BasisEnumeration', 'enumeration_solve']
