"""Domain layer for numeric geometry"""
