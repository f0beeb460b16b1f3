"""Gadget reductions to directed multicut and Steiner orientation, with exact oracles and a toolkit for small directed cuts."""
