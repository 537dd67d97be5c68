from django.apps import AppConfig


class FinCatConfig(AppConfig):
    name = "fincat"
    verbose_name = "Finite categories with cofibrations"
