from .formatter import Formatter
from .document_generator import DocumentGenerator
