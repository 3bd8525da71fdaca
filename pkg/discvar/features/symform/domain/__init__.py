"""Domain layer for symbolic matrices"""
