__version__ = u"0.1.0"
