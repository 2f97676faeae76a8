"""Vocabulary enrichment toolkit.

Discovers layman synonyms for expert seed terms by training GloVe vectors
on a domain corpus, optionally enriching the corpus first with taxonomy
neighbors (synonyms, hyponyms, hypernyms) ranked by Resnik similarity, and
scores the resulting candidate lists against a ground-truth lexicon.
"""

__version__ = "0.1.0"
