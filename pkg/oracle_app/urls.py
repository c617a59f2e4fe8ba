from django.urls import path

from . import views

urlpatterns = [
    path('api/run/grover/<int:n>/<int:t>/', views.run_grover_api, name='run_grover'),
    path('api/run/shor/<int:a>/<int:N>/', views.run_shor_api, name='run_shor'),
    path('api/run/qft/<int:n>/', views.run_qft_api, name='run_qft'),
    path('api/bench/<str:kind>/<int:n>/', views.bench_api, name='bench'),
    path(
        'api/couplings/grover/<int:n>/<int:t>/',
        views.grover_couplings_api,
        name='grover_couplings',
    ),
]
