"""Domain layer for Groebner bases"""
