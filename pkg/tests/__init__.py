"""Test suite for equifuse"""
