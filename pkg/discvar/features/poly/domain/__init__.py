"""Domain layer for polynomials"""
