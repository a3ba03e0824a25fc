from .class_enumerator_module import ClassEnumerator, ClassGF
