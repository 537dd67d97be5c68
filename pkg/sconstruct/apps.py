from django.apps import AppConfig


class SConstructionConfig(AppConfig):
    name = "sconstruct"
    verbose_name = "S-construction"
