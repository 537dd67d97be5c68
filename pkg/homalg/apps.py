from django.apps import AppConfig


class HomAlgConfig(AppConfig):
    name = "homalg"
    verbose_name = "Exact homological algebra"
