"""
Package initialization for bierkit
"""

__version__ = '1.0.0'
__author__ = 'bierkit contributors'
